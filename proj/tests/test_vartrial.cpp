#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fourbox/perturb.hpp"
#include "fourbox/ritz.hpp"
#include "fourbox/vartrial.hpp"
#include "oracles.hpp"

using namespace fourbox;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

const std::vector<TrialSpec> kSpecs{TrialSpec::a1g(), TrialSpec::a1u(), TrialSpec::t2u(1)};

double tensor_energy(const TrialSpec& spec, double a, double lambda, std::array<int, 4> order = {0, 1, 2, 3}) {
  return oracle::trial_rayleigh_quotient(spec.linear_coefficients(), spec.prefactor != TrialPrefactor::One, a, lambda,
                                         order);
}

Eigen::Vector4d random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("trial functions vanish on the walls") {
  std::mt19937_64 rng(7);
  for (const TrialSpec& spec : kSpecs)
    for (int face = 0; face < 4; ++face)
      for (double wall : {-1.0, 1.0})
        for (int k = 0; k < 20; ++k) {
          Eigen::Vector4d q = random_point(rng);
          q(face) = wall;
          CHECK(std::abs(trial_value(spec, 1.3, q)) < 1e-14);
        }
}

TEST_CASE("trial functions transform as their irrep") {
  const SymmetryGroup& g = SymmetryGroup::instance();
  std::mt19937_64 rng(11);
  for (const TrialSpec& spec : {TrialSpec::a1g(), TrialSpec::a1u(), TrialSpec::t2u(1), TrialSpec::t2u(2),
                                TrialSpec::t2u(3)}) {
    for (int k = 0; k < 10; ++k) {
      const Eigen::Vector4d q = random_point(rng);
      double projected = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        const Eigen::Matrix4d m = g.elements()[j].matrix().cast<double>();
        projected += g.character(spec.irrep, j) * trial_value(spec, 0.7, m.transpose() * q);
      }
      projected *= dimension(spec.irrep) / 48.0;
      const double value = trial_value(spec, 0.7, q);
      CHECK(std::abs(projected - value) <= 1e-10 * std::abs(value));
    }
  }
  CHECK_THROWS_AS(TrialSpec::t2u(4), std::invalid_argument);
}

TEST_CASE("moments against an independent quadrature") {
  // Double-exponential nodes cluster at the ends, so the Gaussian peak at 0 is put on one.
  boost::math::quadrature::tanh_sinh<double> ts;
  auto integral = [&](auto f) { return 2.0 * ts.integrate(f, 0.0, 1.0); };
  for (double a : {0.05, 1.0, 6.0, 300.0}) {
    const TrialMoments m = trial_moments(a);
    auto f2 = [a](double q, int k) { return std::pow(q, k) * std::pow(q * q - 1, 2) * std::exp(-2 * a * q * q); };
    auto g2 = [a](double q, int k) {
      return std::pow(q, k) * std::pow(2 * q * (1 + a - a * q * q), 2) * std::exp(-2 * a * q * q);
    };
    CHECK(m.n0 == doctest::Approx(integral([&](double q) { return f2(q, 0); })).epsilon(1e-12));
    CHECK(m.n2 == doctest::Approx(integral([&](double q) { return f2(q, 2); })).epsilon(1e-12));
    CHECK(m.n4 == doctest::Approx(integral([&](double q) { return f2(q, 4); })).epsilon(1e-12));
    CHECK(m.k0 == doctest::Approx(integral([&](double q) { return g2(q, 0); })).epsilon(1e-12));
    CHECK(m.k2 == doctest::Approx(integral([&](double q) { return g2(q, 2); })).epsilon(1e-12));
  }
  CHECK_THROWS_AS(trial_moments(0.0), std::invalid_argument);
  CHECK_THROWS_AS(trial_energy(TrialSpec::a1g(), 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("factorized energy against a 4D tensor grid") {
  const std::array<std::pair<double, double>, 3> spots{{{0.4, 0.0}, {1.1, 1.0}, {2.5, 7.0}}};
  for (const TrialSpec& spec : kSpecs)
    for (const auto& [a, lambda] : spots) {
      CAPTURE(a);
      CAPTURE(lambda);
      const double oracle = tensor_energy(spec, a, lambda);
      CHECK(std::abs(trial_energy(spec, a, lambda) - oracle) <= 1e-8 * oracle);
    }
  // Relabeling the coordinates in the integration leaves the A1g value unchanged.
  CHECK(tensor_energy(TrialSpec::a1g(), 1.1, 1.0, {2, 0, 3, 1}) ==
        doctest::Approx(tensor_energy(TrialSpec::a1g(), 1.1, 1.0)).epsilon(1e-13));
}

TEST_CASE("ground-state energy without interaction") {
  const VariationalResult r = minimize(TrialSpec::a1g(), 0.0);
  CHECK(r.energy >= kPi2);
  CHECK(r.energy - kPi2 <= 0.5);
  // Separable: four times the 1D Rayleigh quotient.
  const TrialMoments m = trial_moments(r.a_star);
  CHECK(r.energy == doctest::Approx(4 * m.k0 / m.n0).epsilon(1e-14));
}

TEST_CASE("T2u partners agree") {
  for (double a : {0.3, 1.0, 4.0})
    for (double lambda : {0.0, 1.0, 30.0}) {
      const double e1 = trial_energy(TrialSpec::t2u(1), a, lambda);
      CHECK(std::abs(trial_energy(TrialSpec::t2u(2), a, lambda) - e1) <= 1e-10 * e1);
      CHECK(std::abs(trial_energy(TrialSpec::t2u(3), a, lambda) - e1) <= 1e-10 * e1);
    }
}

TEST_CASE("minimizer properties") {
  for (const TrialSpec& spec : kSpecs) {
    for (double lambda : {0.0, 1.0, 50.0}) {
      const VariationalResult r = minimize(spec, lambda);
      CHECK(r.irrep == spec.irrep);
      CHECK(r.a_star > 0.0);
      for (double delta : {1e-3, 1e-2, 1e-1}) {
        CHECK(trial_energy(spec, r.a_star * (1 + delta), lambda) >= r.energy);
        CHECK(trial_energy(spec, r.a_star * (1 - delta), lambda) >= r.energy);
      }
    }
  }
  double previous = 0.0;
  for (double lambda : {0.1, 1.0, 10.0}) {
    const double a = minimize(TrialSpec::a1g(), lambda).a_star;
    CHECK(a > previous);
    previous = a;
  }
}

TEST_CASE("interior minimum at lambda = 1") {
  std::vector<double> profile;
  for (double a = 0.1; a <= 5.0; a += 0.1) profile.push_back(trial_energy(TrialSpec::a1g(), a, 1.0));
  const auto best = std::min_element(profile.begin(), profile.end()) - profile.begin();
  CHECK(best > 0);
  CHECK(best + 1 < static_cast<long>(profile.size()));
  CHECK(profile[static_cast<std::size_t>(best)] > kPi2 + 4 * (kPi2 - 6) / kPi2 - 1.0);
}

TEST_CASE("level ordering") {
  // Without interaction the linear prefactors only enter the kinetic term
  // through |c|, so A1u and T2u start out degenerate (as do the exact levels).
  CHECK(minimize(TrialSpec::a1u(), 0.0).energy == doctest::Approx(minimize(TrialSpec::t2u(1), 0.0).energy));
  for (double lambda : {0.01, 0.5, 1.0, 3.0, 10.0, 100.0, 1e4}) {
    CAPTURE(lambda);
    const double e_a1g = minimize(TrialSpec::a1g(), lambda).energy;
    const double e_a1u = minimize(TrialSpec::a1u(), lambda).energy;
    const double e_t2u = minimize(TrialSpec::t2u(1), lambda).energy;
    CHECK(e_a1g < e_a1u);
    CHECK(e_a1u < e_t2u);
  }
}

TEST_CASE("large-lambda scaling of the ground-state trial") {
  const double lambda = 1e6;
  const double scaled = minimize(TrialSpec::a1g(), lambda).energy / std::sqrt(lambda);
  CHECK(std::abs(scaled - std::sqrt(48.0)) <= 0.02 * std::sqrt(48.0));
  CHECK(minimize(TrialSpec::a1u(), lambda).energy / std::sqrt(lambda) ==
        doctest::Approx(std::sqrt(72.0)).epsilon(0.02));
  CHECK(minimize(TrialSpec::t2u(1), lambda).energy / std::sqrt(lambda) ==
        doctest::Approx(std::sqrt(120.0)).epsilon(0.02));
}

TEST_CASE("crossover with first-order theory") {
  const auto levels = first_order_spectrum(7);
  const std::vector<std::pair<TrialSpec, const char*>> cases{
      {TrialSpec::a1g(), "1A1g"}, {TrialSpec::a1u(), "1A1u"}, {TrialSpec::t2u(1), "1T2u"}};
  for (const auto& [spec, label] : cases) {
    CAPTURE(label);
    const PTLevel& level = find_level(levels, label);
    CHECK(minimize(spec, 0.0).energy > pt_energy(level, 0.0));
    CHECK(pt_energy(level, 0.0) == level.e0);
    const Crossover c = crossover(spec, level, 0.0, 10.0);
    CHECK(c.sign_changes == 1);
    REQUIRE(c.lambda_c.has_value());
    const double lc = *c.lambda_c;
    CHECK(lc > 0.0);
    CHECK(lc < 10.0);
    CHECK(minimize(spec, lc - 1e-3).energy > pt_energy(level, lc - 1e-3));
    CHECK(minimize(spec, lc + 1e-3).energy < pt_energy(level, lc + 1e-3));
    CHECK(minimize(spec, 10.0).energy < pt_energy(level, 10.0));
  }
  // No sign change on a window entirely below the crossover.
  const Crossover none = crossover(TrialSpec::a1g(), find_level(levels, "1A1g"), 0.0, 0.01);
  CHECK_FALSE(none.lambda_c.has_value());
  CHECK(none.sign_changes == 0);
}

TEST_CASE("variational energies bound the Rayleigh-Ritz levels from above") {
  const auto multiplets = enumerate_multiplets(44);
  const std::vector<double> grid{0.5, 1.0, 2.0};
  for (const TrialSpec& spec : kSpecs) {
    CAPTURE(name(spec.irrep));
    const auto curves = sweep(build_symmetrized_basis(spec.irrep, multiplets), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double e_rr = curves[0].samples[i].second;
      const double e_var = minimize(spec, grid[i]).energy;
      CHECK(e_var >= e_rr);
    }
  }
}
