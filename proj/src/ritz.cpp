#include "fourbox/ritz.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <Eigen/Eigenvalues>

namespace fourbox {

namespace {

constexpr double kDropTolerance = 1e-10;

}  // namespace

EmptyBasis::EmptyBasis(Irrep s)
    : std::runtime_error("irrep " + std::string(name(s)) + " does not occur in the selected shells"), irrep_(s) {}

SymmetrizedBasis build_symmetrized_basis(Irrep irrep, std::span<const DegenerateMultiplet> shells) {
  if (shells.empty()) throw std::invalid_argument("no shells selected");
  SymmetrizedBasis basis;
  basis.irrep = irrep;
  for (const DegenerateMultiplet& m : shells) {
    basis.source_shells.push_back(m.shell);
    basis.states.insert(basis.states.end(), m.members.begin(), m.members.end());
  }
  std::sort(basis.states.begin(), basis.states.end());
  basis.states.erase(std::unique(basis.states.begin(), basis.states.end()), basis.states.end());

  std::map<ProductState, Eigen::Index> position;
  for (std::size_t i = 0; i < basis.states.size(); ++i) position[basis.states[i]] = static_cast<Eigen::Index>(i);

  const Projector p = SymmetryGroup::instance().projector(irrep);
  const auto n = static_cast<Eigen::Index>(basis.states.size());
  std::vector<Eigen::VectorXd> accepted;
  for (const ProductState& s : basis.states) {
    const StateVector image = project(p, s);
    if (image.empty()) continue;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (const auto& [state, coeff] : image) v(position.at(state)) = to_double(coeff);
    // Modified Gram-Schmidt against the accepted vectors; s itself has unit norm.
    for (const Eigen::VectorXd& u : accepted) v -= u.dot(v) * u;
    const double norm = v.norm();
    if (norm < kDropTolerance) continue;
    accepted.push_back(v / norm);
  }
  if (accepted.empty()) throw EmptyBasis(irrep);

  basis.vectors.resize(n, static_cast<Eigen::Index>(accepted.size()));
  for (std::size_t k = 0; k < accepted.size(); ++k) basis.vectors.col(static_cast<Eigen::Index>(k)) = accepted[k];
  return basis;
}

SymmetrizedBasis build_symmetrized_basis(Irrep irrep, std::span<const int> shells) {
  std::set<int> unique(shells.begin(), shells.end());
  std::vector<DegenerateMultiplet> multiplets;
  for (int shell : unique) {
    DegenerateMultiplet m = multiplet_for_shell(shell);
    if (m.members.empty()) throw std::invalid_argument("no product state has shell " + std::to_string(shell));
    multiplets.push_back(std::move(m));
  }
  return build_symmetrized_basis(irrep, multiplets);
}

Eigen::MatrixXd kinetic_matrix(std::span<const ProductState> states) {
  Eigen::VectorXd diagonal(static_cast<Eigen::Index>(states.size()));
  for (std::size_t i = 0; i < states.size(); ++i) diagonal(static_cast<Eigen::Index>(i)) = e0(states[i]);
  return diagonal.asDiagonal();
}

Eigen::MatrixXd potential_matrix(std::span<const ProductState> states) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd v(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      v(i, j) = v(j, i) = pair_potential_elem(states[static_cast<std::size_t>(i)], states[static_cast<std::size_t>(j)]);
  return v;
}

Eigen::MatrixXd assemble_hamiltonian(const SymmetrizedBasis& basis, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
  const Eigen::MatrixXd& c = basis.vectors;
  Eigen::MatrixXd h = c.transpose() * (kinetic_matrix(basis.states) + lambda * potential_matrix(basis.states)) * c;
  return 0.5 * (h + h.transpose());
}

Eigen::VectorXd block_levels(const SymmetrizedBasis& basis, double lambda) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(assemble_hamiltonian(basis, lambda),
                                                              Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& all = solver.eigenvalues();
  const int dim = dimension(basis.irrep);
  Eigen::VectorXd levels(all.size() / dim);
  for (Eigen::Index k = 0; k < levels.size(); ++k) levels(k) = all.segment(k * dim, dim).mean();
  return levels;
}

std::vector<EnergyCurve> sweep(const SymmetrizedBasis& basis, std::span<const double> lambda_grid) {
  if (lambda_grid.empty()) throw std::invalid_argument("empty lambda grid");
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    if (lambda_grid[i] < 0.0) throw std::invalid_argument("lambda must be nonnegative");
    if (i > 0 && !(lambda_grid[i] > lambda_grid[i - 1])) throw std::invalid_argument("lambda grid must ascend");
  }
  const Eigen::Index count = basis.size() / dimension(basis.irrep);
  std::vector<EnergyCurve> curves(static_cast<std::size_t>(count));
  for (Eigen::Index k = 0; k < count; ++k) {
    curves[static_cast<std::size_t>(k)].irrep = basis.irrep;
    curves[static_cast<std::size_t>(k)].level_index = static_cast<int>(k + 1);
  }
  const Eigen::MatrixXd t = basis.vectors.transpose() * kinetic_matrix(basis.states) * basis.vectors;
  const Eigen::MatrixXd v = basis.vectors.transpose() * potential_matrix(basis.states) * basis.vectors;
  const int dim = dimension(basis.irrep);
  for (double lambda : lambda_grid) {
    Eigen::MatrixXd h = t + lambda * v;
    h = 0.5 * (h + h.transpose());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    for (Eigen::Index k = 0; k < count; ++k)
      curves[static_cast<std::size_t>(k)].samples.emplace_back(lambda,
                                                               solver.eigenvalues().segment(k * dim, dim).mean());
  }
  return curves;
}

}  // namespace fourbox
