#include "fourbox/largebox.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace fourbox {

const Eigen::Matrix4d& jacobi_matrix() {
  static const Eigen::Matrix4d j = [] {
    const double s2 = std::sqrt(2.0);
    const double s6 = std::sqrt(6.0);
    const double s3 = std::sqrt(3.0);
    Eigen::Matrix4d m;
    m << -s2 / 2, s2 / 2, 0, 0,
         -s6 / 6, -s6 / 6, s6 / 3, 0,
         -s3 / 6, -s3 / 6, -s3 / 6, s3 / 2,
         0.5, 0.5, 0.5, 0.5;
    return m;
  }();
  return j;
}

Eigen::Matrix3d relative_action(const GroupElement& e) {
  const Eigen::Matrix4d m = e.matrix().cast<double>();
  const Eigen::Matrix4d r = jacobi_matrix() * m * jacobi_matrix().transpose();
  return r.topLeftCorner<3, 3>();
}

double largebox_energy(const LargeBoxState& s, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
  if (s.n[0] < 0 || s.n[1] < 0 || s.n[2] < 0) throw std::invalid_argument("oscillator quanta must be nonnegative");
  return s.K * s.K + 2.0 * std::sqrt(lambda) * (2.0 * s.quanta() + 3.0);
}

// Complete homogeneous symmetric polynomials from power sums:
// N h_N = sum_{k=1..N} p_k h_{N-k}, with p_k = tr(R^k).
std::vector<int> oscillator_shell_character(int quanta) {
  if (quanta < 0) throw std::invalid_argument("oscillator quanta must be nonnegative");
  const auto group = SymmetryGroup::instance().elements();
  std::vector<int> chi;
  chi.reserve(group.size());
  for (const GroupElement& e : group) {
    const Eigen::Matrix3d r = relative_action(e);
    std::vector<long> p(static_cast<std::size_t>(quanta) + 1, 0);
    Eigen::Matrix3d power = Eigen::Matrix3d::Identity();
    for (int k = 1; k <= quanta; ++k) {
      power = power * r;
      p[static_cast<std::size_t>(k)] = std::lround(power.trace());
    }
    std::vector<long> h(static_cast<std::size_t>(quanta) + 1, 0);
    h[0] = 1;
    for (int n = 1; n <= quanta; ++n) {
      long sum = 0;
      for (int k = 1; k <= n; ++k) sum += p[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(n - k)];
      h[static_cast<std::size_t>(n)] = sum / n;
    }
    chi.push_back(static_cast<int>(h[static_cast<std::size_t>(quanta)]));
  }
  return chi;
}

Decomposition largebox_irrep(const LargeBoxState& s) {
  const SymmetryGroup& g = SymmetryGroup::instance();
  const std::vector<int> shell = oscillator_shell_character(s.quanta());
  const Irrep free = s.cs == FreeFactor::Cosine ? Irrep::A1g : Irrep::A1u;
  Decomposition d;
  for (Irrep irrep : kAllIrreps) {
    long sum = 0;
    for (std::size_t j = 0; j < g.size(); ++j) sum += g.character(irrep, j) * g.character(free, j) * shell[j];
    if (sum % static_cast<long>(g.size()) != 0) throw std::logic_error("non-integral irrep multiplicity");
    if (const long m = sum / static_cast<long>(g.size()); m != 0) d[irrep] = static_cast<int>(m);
  }
  return d;
}

ScaledLimit scaled_limit(std::span<const std::pair<double, double>> samples) {
  std::vector<std::pair<double, double>> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::remove_if(sorted.begin(), sorted.end(), [](const auto& p) { return !(p.first > 0.0); }),
               sorted.end());
  if (sorted.size() < 3) throw InsufficientTail("need at least 3 positive-lambda samples");

  const auto tail = std::span(sorted).last(3);
  Eigen::Matrix3d a;
  Eigen::Vector3d b;
  for (int i = 0; i < 3; ++i) {
    const double r = std::sqrt(tail[static_cast<std::size_t>(i)].first);
    a.row(i) << r, 1.0, 1.0 / r;
    b(i) = tail[static_cast<std::size_t>(i)].second;
  }
  ScaledLimit out;
  out.estimate = a.fullPivLu().solve(b)(0);
  const double r1 = std::sqrt(tail[1].first), r2 = std::sqrt(tail[2].first);
  out.two_term = (tail[2].second - tail[1].second) / (r2 - r1);
  out.indicator = std::abs(out.estimate - out.two_term);
  return out;
}

ScaledLimit scaled_limit(const EnergyCurve& curve) { return scaled_limit(curve.samples); }

}  // namespace fourbox
