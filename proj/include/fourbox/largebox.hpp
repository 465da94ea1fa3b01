#ifndef FOURBOX_LARGEBOX_HPP
#define FOURBOX_LARGEBOX_HPP

// Large-box limit: Jacobi coordinates, free center of mass plus an isotropic
// oscillator in the relative coordinates, and the symmetry of those states.

#include <array>
#include <span>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

#include "fourbox/ritz.hpp"
#include "fourbox/symgroup.hpp"

namespace fourbox {

/// Orthogonal map q -> xi; rows 1-3 are relative coordinates, row 4 the center of mass.
const Eigen::Matrix4d& jacobi_matrix();

template <typename Derived>
Eigen::Vector4d to_jacobi(const Eigen::MatrixBase<Derived>& q) {
  return jacobi_matrix() * q;
}

template <typename Derived>
Eigen::Vector4d from_jacobi(const Eigen::MatrixBase<Derived>& xi) {
  return jacobi_matrix().transpose() * xi;
}

/// sum_{i<j} (q_i - q_j)^2
template <typename Derived>
double pair_interaction(const Eigen::MatrixBase<Derived>& q) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sum += (q(i) - q(j)) * (q(i) - q(j));
  return sum;
}

/// 3x3 orthogonal action of a group element on (xi1, xi2, xi3).
Eigen::Matrix3d relative_action(const GroupElement& e);

enum class FreeFactor { Cosine, Sine };

/// cos(K xi4) or sin(K xi4) times chi_n1(xi1) chi_n2(xi2) chi_n3(xi3).
struct LargeBoxState {
  double K = 0.0;
  std::array<int, 3> n{0, 0, 0};
  FreeFactor cs = FreeFactor::Cosine;

  int quanta() const { return n[0] + n[1] + n[2]; }
};

/// K^2 + 2 sqrt(lambda) (2 n1 + 2 n2 + 2 n3 + 3); lambda must be positive.
double largebox_energy(const LargeBoxState& s, double lambda);

/// 2 (2 N + 3), the limit of lambda^-1/2 E for N total oscillator quanta.
inline double oscillator_ladder(int quanta) { return 2.0 * (2.0 * quanta + 3.0); }

/// Character of the degree-N oscillator shell (symmetric power of the
/// relative-coordinate representation) for every group element.
std::vector<int> oscillator_shell_character(int quanta);

/// Irrep content of the free factor times the oscillator shell containing s.
Decomposition largebox_irrep(const LargeBoxState& s);

class InsufficientTail : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScaledLimit {
  double estimate = 0.0;      // c in c sqrt(lambda) + d + e / sqrt(lambda)
  double two_term = 0.0;      // c from the last two samples with c sqrt(lambda) + d
  double indicator = 0.0;     // |estimate - two_term|
};

/// Extrapolates lim lambda^-1/2 E(lambda) from the three largest-lambda samples.
ScaledLimit scaled_limit(std::span<const std::pair<double, double>> samples);
ScaledLimit scaled_limit(const EnergyCurve& curve);

}  // namespace fourbox

#endif  // FOURBOX_LARGEBOX_HPP
