#include "fourbox/vartrial.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fourbox/largebox.hpp"

namespace fourbox {

namespace {

constexpr double kQuadratureTolerance = 1e-12;
constexpr double kBracketStart = 1e-3;
constexpr double kBracketEnd = 64.0;
constexpr double kBracketCap = 1e6;

// Integrates an even function over [-1, 1]. The integrands are Gaussians of
// width ~ 1/sqrt(a), so [0, 1] is split where exp(-2 a q^2) has died off.
// Each piece is mapped onto [-1, 1] because the adaptive rule reports its
// error estimate in units of that reference interval.
template <typename F>
double integrate_even(F f, double a) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double split = std::min(1.0, 8.0 / std::sqrt(a));
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  double lo = 0.0;
  for (double hi : {split / 4, split, 1.0}) {
    if (hi <= lo) continue;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    auto g = [&](double t) { return half * f(mid + half * t); };
    double e = 0.0;
    double l = 0.0;
    value += Rule::integrate(g, -1.0, 1.0, 15, 1e-14, &e, &l);
    error += e;
    l1 += l;
    lo = hi;
  }
  if (!std::isfinite(value) || error > kQuadratureTolerance * l1)
    throw QuadratureFailure("1D integral did not reach tolerance (relative error " + std::to_string(error / l1) + ")");
  return 2.0 * value;
}

}  // namespace

TrialSpec TrialSpec::t2u(int partner) {
  switch (partner) {
    case 1:
      return {Irrep::T2u, TrialPrefactor::Xi1};
    case 2:
      return {Irrep::T2u, TrialPrefactor::Xi2};
    case 3:
      return {Irrep::T2u, TrialPrefactor::Xi3};
    default:
      throw std::invalid_argument("T2u partner must be 1, 2 or 3");
  }
}

Eigen::Vector4d TrialSpec::linear_coefficients() const {
  switch (prefactor) {
    case TrialPrefactor::One:
      return Eigen::Vector4d::Zero();
    case TrialPrefactor::Xi1:
      return jacobi_matrix().row(0).transpose();
    case TrialPrefactor::Xi2:
      return jacobi_matrix().row(1).transpose();
    case TrialPrefactor::Xi3:
      return jacobi_matrix().row(2).transpose();
    case TrialPrefactor::Xi4:
      return jacobi_matrix().row(3).transpose();
  }
  return Eigen::Vector4d::Zero();
}

TrialMoments trial_moments(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("exponent must be positive");
  auto f2 = [a](double q) {
    const double f = (q * q - 1.0);
    return f * f * std::exp(-2.0 * a * q * q);
  };
  auto fp2 = [a](double q) {
    const double g = 2.0 * q * (1.0 + a - a * q * q);
    return g * g * std::exp(-2.0 * a * q * q);
  };
  TrialMoments m;
  m.n0 = integrate_even(f2, a);
  m.n2 = integrate_even([&](double q) { return q * q * f2(q); }, a);
  m.n4 = integrate_even([&](double q) { return q * q * q * q * f2(q); }, a);
  m.k0 = integrate_even(fp2, a);
  m.k2 = integrate_even([&](double q) { return q * q * fp2(q); }, a);
  return m;
}

double normalization(const TrialSpec& spec, double a) {
  const TrialMoments m = trial_moments(a);
  const double n03 = m.n0 * m.n0 * m.n0;
  if (spec.prefactor == TrialPrefactor::One) return 1.0 / std::sqrt(n03 * m.n0);
  return 1.0 / std::sqrt(spec.linear_coefficients().squaredNorm() * m.n2 * n03);
}

double trial_value(const TrialSpec& spec, double a, const Eigen::Vector4d& q) {
  double value = normalization(spec, a) * std::exp(-a * q.squaredNorm());
  for (int i = 0; i < 4; ++i) value *= q(i) * q(i) - 1.0;
  if (spec.prefactor != TrialPrefactor::One) value *= spec.linear_coefficients().dot(q);
  return value;
}

// Cross terms between coordinates vanish by parity of the 1D factors; with a
// linear prefactor the c_k G and P d_k G terms cancel because int q f f' = -n0/2.
double trial_energy(const TrialSpec& spec, double a, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
  const TrialMoments m = trial_moments(a);
  if (spec.prefactor == TrialPrefactor::One) return 4.0 * m.k0 / m.n0 + 12.0 * lambda * m.n2 / m.n0;

  const Eigen::Vector4d c = spec.linear_coefficients();
  const double sum = c.sum();
  const double pairing = sum * sum / c.squaredNorm() - 1.0;
  const double kinetic = m.k2 / m.n2 + 3.0 * m.k0 / m.n0;
  const double potential = 3.0 * m.n4 / m.n2 + 9.0 * m.n2 / m.n0 - 2.0 * pairing * m.n2 / m.n0;
  return kinetic + lambda * potential;
}

VariationalResult minimize(const TrialSpec& spec, double lambda) {
  auto energy = [&](double a) { return trial_energy(spec, a, lambda); };

  // Geometric scan, extended upward until the smallest value is interior.
  constexpr double kStep = 1.3335214321633240;  // 10^(1/8)
  std::vector<double> grid;
  std::vector<double> values;
  for (double a = kBracketStart; a <= kBracketEnd * 1.0000001; a *= kStep) {
    grid.push_back(a);
    values.push_back(energy(a));
  }
  std::size_t best = 0;
  for (;;) {
    best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
      if (values[i] < values[best]) best = i;
    if (best == 0) throw BracketFailure("minimum at the lower bracket end");
    if (best + 1 < values.size()) break;
    const double next = grid.back() * kStep;
    if (next > kBracketCap) throw BracketFailure("no interior minimum below a = 1e6");
    grid.push_back(next);
    values.push_back(energy(next));
  }

  constexpr double kInvPhi = 0.6180339887498949;
  double lo = grid[best - 1];
  double hi = grid[best + 1];
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = energy(x1);
  double f2 = energy(x2);
  while (hi - lo > 1e-8 * 0.5 * (hi + lo)) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = energy(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = energy(x2);
    }
  }
  const double a_star = 0.5 * (lo + hi);
  return {spec.irrep, lambda, a_star, energy(a_star)};
}

Crossover crossover(const TrialSpec& spec, const PTLevel& level, double lambda_lo, double lambda_hi,
                    int scan_points) {
  if (spec.irrep != level.irrep) throw std::invalid_argument("trial and PT level must share an irrep");
  if (!(lambda_hi > lambda_lo) || lambda_lo < 0.0 || scan_points < 2)
    throw std::invalid_argument("invalid crossover range");
  auto gap = [&](double lambda) { return minimize(spec, lambda).energy - pt_energy(level, lambda); };

  Crossover out;
  const double step = (lambda_hi - lambda_lo) / (scan_points - 1);
  double prev_lambda = lambda_lo;
  double prev = gap(lambda_lo);
  std::optional<std::pair<double, double>> bracket;
  for (int i = 1; i < scan_points; ++i) {
    const double lambda = i + 1 == scan_points ? lambda_hi : lambda_lo + step * i;
    const double value = gap(lambda);
    if ((prev > 0.0) != (value > 0.0)) {
      ++out.sign_changes;
      if (!bracket) bracket = {prev_lambda, lambda};
    }
    prev = value;
    prev_lambda = lambda;
  }
  if (!bracket) return out;

  auto [lo, hi] = *bracket;
  const bool lo_positive = gap(lo) > 0.0;
  while (hi - lo > 1e-5) {
    const double mid = 0.5 * (lo + hi);
    if ((gap(mid) > 0.0) == lo_positive)
      lo = mid;
    else
      hi = mid;
  }
  out.lambda_c = 0.5 * (lo + hi);
  return out;
}

}  // namespace fourbox
