#include "fourbox/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

namespace fourbox {

namespace {

bool close(double a, double b) {
  return std::abs(a - b) <= kClusterTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::string PTLevel::label() const { return std::to_string(sequence_index) + std::string(name(irrep)); }

Eigen::MatrixXd secular_matrix(const DegenerateMultiplet& m) {
  const auto g = static_cast<Eigen::Index>(m.members.size());
  Eigen::MatrixXd h(g, g);
  for (Eigen::Index i = 0; i < g; ++i)
    for (Eigen::Index j = i; j < g; ++j)
      h(i, j) = h(j, i) = pair_potential_elem(m.members[static_cast<std::size_t>(i)], m.members[static_cast<std::size_t>(j)]);
  return h;
}

std::vector<PTLevel> first_order(const DegenerateMultiplet& m) {
  if (m.members.empty()) throw std::invalid_argument("empty multiplet");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(secular_matrix(m));
  const Eigen::VectorXd& roots = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  const SymmetryGroup& group = SymmetryGroup::instance();
  std::vector<Eigen::MatrixXd> projectors;
  for (Irrep s : kAllIrreps) projectors.push_back(projector_matrix<double>(group.projector(s), m.members));

  std::vector<PTLevel> levels;
  const Eigen::Index g = roots.size();
  Eigen::Index begin = 0;
  while (begin < g) {
    Eigen::Index end = begin + 1;
    while (end < g && close(roots(end), roots(begin))) ++end;
    const Eigen::Index width = end - begin;
    const double e1 = roots.segment(begin, width).mean();
    const Eigen::MatrixXd basis = vectors.middleCols(begin, width);

    // trace(V^T P_S V) counts the S-content of an invariant cluster eigenspace.
    int covered = 0;
    for (Irrep s : kAllIrreps) {
      const Eigen::MatrixXd restricted = basis.transpose() * projectors[index_of(s)] * basis;
      const double content = restricted.trace();
      const long rounded = std::lround(content);
      if (std::abs(content - static_cast<double>(rounded)) > 1e-6)
        throw UnlabeledRoot("non-integral irrep content near e1 = " + std::to_string(e1));
      // Within the cluster P_S must act as an orthogonal projector.
      if ((restricted * restricted - restricted).norm() > 1e-6)
        throw UnlabeledRoot("cluster eigenspace is not invariant near e1 = " + std::to_string(e1));
      if (rounded == 0) continue;
      if (rounded % dimension(s) != 0)
        throw UnlabeledRoot("partial irrep " + std::string(name(s)) + " near e1 = " + std::to_string(e1));
      levels.push_back({m.shell, m.energy(), e1, s, static_cast<int>(rounded / dimension(s)), 0});
      covered += static_cast<int>(rounded);
    }
    if (covered != width) throw UnlabeledRoot("no projector reproduces the roots near e1 = " + std::to_string(e1));
    begin = end;
  }
  std::stable_sort(levels.begin(), levels.end(), [](const PTLevel& a, const PTLevel& b) { return a.e1 < b.e1; });
  return levels;
}

std::vector<PTLevel> first_order_spectrum(int shell_cutoff) {
  std::vector<PTLevel> all;
  for (const DegenerateMultiplet& m : enumerate_multiplets(shell_cutoff)) {
    auto levels = first_order(m);
    all.insert(all.end(), levels.begin(), levels.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const PTLevel& a, const PTLevel& b) {
    if (a.shell != b.shell) return a.shell < b.shell;
    return a.e1 < b.e1;
  });
  std::map<Irrep, int> next;
  for (PTLevel& level : all) {
    int& k = next[level.irrep];
    level.sequence_index = k + 1;
    k += level.multiplicity;
  }
  return all;
}

bool first_order_degenerate(const PTLevel& a, const PTLevel& b) { return a.shell == b.shell && close(a.e1, b.e1); }

const PTLevel& find_level(const std::vector<PTLevel>& levels, const std::string& label) {
  for (const PTLevel& level : levels)
    if (level.label() == label) return level;
  throw std::out_of_range("no level labeled " + label);
}

}  // namespace fourbox
