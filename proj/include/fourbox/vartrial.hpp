#ifndef FOURBOX_VARTRIAL_HPP
#define FOURBOX_VARTRIAL_HPP

// One-parameter trial functions P(q) prod_i (q_i^2 - 1) exp(-a sum_i q_i^2)
// with P = 1 (A1g), xi4 (A1u) or a relative coordinate xi_k (T2u partner k).

#include <optional>
#include <stdexcept>

#include <Eigen/Core>

#include "fourbox/perturb.hpp"
#include "fourbox/symgroup.hpp"

namespace fourbox {

class QuadratureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BracketFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TrialPrefactor { One, Xi4, Xi1, Xi2, Xi3 };

struct TrialSpec {
  Irrep irrep = Irrep::A1g;
  TrialPrefactor prefactor = TrialPrefactor::One;

  static TrialSpec a1g() { return {Irrep::A1g, TrialPrefactor::One}; }
  static TrialSpec a1u() { return {Irrep::A1u, TrialPrefactor::Xi4}; }
  /// partner in {1, 2, 3}
  static TrialSpec t2u(int partner = 1);

  /// Coefficients c of the linear prefactor c . q (zero for P = 1).
  Eigen::Vector4d linear_coefficients() const;
};

/// 1D integrals over [-1, 1] with f(q) = (q^2 - 1) exp(-a q^2).
struct TrialMoments {
  double n0 = 0.0;  // int f^2
  double n2 = 0.0;  // int q^2 f^2
  double n4 = 0.0;  // int q^4 f^2
  double k0 = 0.0;  // int f'^2
  double k2 = 0.0;  // int q^2 f'^2
};

/// Adaptive Gauss-Kronrod to 1e-12 relative; throws QuadratureFailure otherwise.
TrialMoments trial_moments(double a);

/// N such that <F|F> = 1.
double normalization(const TrialSpec& spec, double a);

/// Normalized F(q).
double trial_value(const TrialSpec& spec, double a, const Eigen::Vector4d& q);

/// <grad F . grad F> + lambda <F| sum_{i<j} (q_i - q_j)^2 |F>, over <F|F>.
double trial_energy(const TrialSpec& spec, double a, double lambda);

struct VariationalResult {
  Irrep irrep = Irrep::A1g;
  double lambda = 0.0;
  double a_star = 0.0;
  double energy = 0.0;
};

/// Golden-section search for the optimal exponent.
VariationalResult minimize(const TrialSpec& spec, double lambda);

struct Crossover {
  /// Where E_var - E_PT changes sign, to 1e-4 in lambda.
  std::optional<double> lambda_c;
  /// Sign changes seen on the scan grid.
  int sign_changes = 0;
};

/// Scans (lambda_lo, lambda_hi] on `scan_points` points and bisects the first sign change.
Crossover crossover(const TrialSpec& spec, const PTLevel& level, double lambda_lo, double lambda_hi,
                    int scan_points = 41);

}  // namespace fourbox

#endif  // FOURBOX_VARTRIAL_HPP
