#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fourbox/perturb.hpp"
#include "fourbox/ritz.hpp"

using namespace fourbox;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

const std::vector<int> kA1gShells{4, 10, 12};
const std::vector<int> kT2gShells{10, 12};

std::vector<double> unit_grid(int count) {
  std::vector<double> grid;
  for (int i = 0; i < count; ++i) grid.push_back(static_cast<double>(i) / (count - 1));
  return grid;
}

}  // namespace

TEST_CASE("symmetrized basis dimensions") {
  CHECK(build_symmetrized_basis(Irrep::A1g, kA1gShells).size() == 3);
  CHECK_THROWS_AS(build_symmetrized_basis(Irrep::T2g, std::vector<int>{4}), EmptyBasis);
  const SymmetrizedBasis t2g = build_symmetrized_basis(Irrep::T2g, kT2gShells);
  CHECK(t2g.size() == 6);
  CHECK(t2g.source_shells == kT2gShells);

  try {
    build_symmetrized_basis(Irrep::A2u, std::vector<int>{4, 7});
    FAIL("expected EmptyBasis");
  } catch (const EmptyBasis& e) {
    CHECK(e.irrep() == Irrep::A2u);
    CHECK(std::string(e.what()).find("A2u") != std::string::npos);
  }
  CHECK_THROWS_AS(build_symmetrized_basis(Irrep::A1g, std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(build_symmetrized_basis(Irrep::A1g, std::vector<int>{5}), std::invalid_argument);
}

TEST_CASE("dimension equals multiplicity times irrep dimension") {
  const auto multiplets = enumerate_multiplets(30);
  for (Irrep s : kAllIrreps) {
    int expected = 0;
    for (const auto& m : multiplets) {
      const Decomposition d = decompose_span(m.members);
      if (auto it = d.find(s); it != d.end()) expected += it->second * dimension(s);
    }
    CAPTURE(name(s));
    if (expected == 0) {
      CHECK_THROWS_AS(build_symmetrized_basis(s, multiplets), EmptyBasis);
    } else {
      CHECK(build_symmetrized_basis(s, multiplets).size() == expected);
    }
  }
}

TEST_CASE("basis vectors are orthonormal and fixed by their projector") {
  const auto multiplets = enumerate_multiplets(27);
  for (Irrep s : kAllIrreps) {
    CAPTURE(name(s));
    SymmetrizedBasis b;
    try {
      b = build_symmetrized_basis(s, multiplets);
    } catch (const EmptyBasis&) {
      continue;
    }
    const Eigen::MatrixXd gram = b.vectors.transpose() * b.vectors;
    CHECK((gram - Eigen::MatrixXd::Identity(b.size(), b.size())).cwiseAbs().maxCoeff() <= 1e-12);
    const Eigen::MatrixXd p = projector_matrix<double>(SymmetryGroup::instance().projector(s), b.states);
    CHECK((p * b.vectors - b.vectors).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("hamiltonian examples") {
  const SymmetrizedBasis ground = build_symmetrized_basis(Irrep::A1g, std::vector<int>{4});
  const Eigen::MatrixXd h0 = assemble_hamiltonian(ground, 0.0);
  REQUIRE(h0.rows() == 1);
  CHECK(h0(0, 0) == doctest::Approx(kPi2).epsilon(1e-15));
  CHECK(assemble_hamiltonian(ground, 1.0)(0, 0) == doctest::Approx(kPi2 + 4 * (kPi2 - 6) / kPi2).epsilon(1e-14));
  CHECK_THROWS_AS(assemble_hamiltonian(ground, -0.1), std::invalid_argument);

  const SymmetrizedBasis b = build_symmetrized_basis(Irrep::T2g, kT2gShells);
  const Eigen::MatrixXd d1 = assemble_hamiltonian(b, 1.0) - assemble_hamiltonian(b, 0.0);
  const Eigen::MatrixXd d3 = assemble_hamiltonian(b, 3.7) - assemble_hamiltonian(b, 0.0);
  CHECK((d3 - 3.7 * d1).cwiseAbs().maxCoeff() <= 1e-12);
  const Eigen::MatrixXd h = assemble_hamiltonian(b, 0.8);
  CHECK((h - h.transpose()).norm() == 0.0);
}

TEST_CASE("lambda = 0 gives the shell energies") {
  const auto levels = block_levels(build_symmetrized_basis(Irrep::A1g, kA1gShells), 0.0);
  REQUIRE(levels.size() == 3);
  CHECK(std::abs(levels(0) - kPi2) <= 1e-10);
  CHECK(std::abs(levels(1) - 5 * kPi2 / 2) <= 1e-10);
  CHECK(std::abs(levels(2) - 3 * kPi2) <= 1e-10);

  const auto multiplets = enumerate_multiplets(30);
  for (Irrep s : {Irrep::T1u, Irrep::Eg, Irrep::T1g}) {
    const SymmetrizedBasis b = build_symmetrized_basis(s, multiplets);
    const Eigen::MatrixXd h = assemble_hamiltonian(b, 0.0);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    for (double e : solver.eigenvalues()) {
      const double shell = e / (kPi2 / 4);
      CHECK(std::abs(shell - std::round(shell)) * kPi2 / 4 <= 1e-10);
    }
  }
}

TEST_CASE("one-dimensional blocks equal first-order theory") {
  // A1u appears once in shell 7, A1g once in shell 4: the 1x1 block is e0 + e1 lambda.
  const auto levels7 = first_order(multiplet_for_shell(7));
  const PTLevel& a1u = levels7[0];
  REQUIRE(a1u.irrep == Irrep::A1u);
  const SymmetrizedBasis b = build_symmetrized_basis(Irrep::A1u, std::vector<int>{7});
  REQUIRE(b.size() == 1);
  for (double lambda : {0.0, 0.3, 1.0, 17.0}) {
    CHECK(std::abs(assemble_hamiltonian(b, lambda)(0, 0) - pt_energy(a1u, lambda)) <= 1e-12 * pt_energy(a1u, lambda));
  }
}

TEST_CASE("symmetry forbids coupling between blocks") {
  const auto multiplets = enumerate_multiplets(22);
  const SymmetrizedBasis a = build_symmetrized_basis(Irrep::A1g, multiplets);
  const SymmetrizedBasis t = build_symmetrized_basis(Irrep::T2g, multiplets);
  const SymmetrizedBasis u = build_symmetrized_basis(Irrep::T2u, multiplets);
  REQUIRE(a.states == t.states);
  REQUIRE(a.states == u.states);
  SymmetrizedBasis combined = a;
  combined.vectors.resize(a.vectors.rows(), a.size() + t.size() + u.size());
  combined.vectors << a.vectors, t.vectors, u.vectors;
  const Eigen::MatrixXd h = assemble_hamiltonian(combined, 1.0);
  CHECK(h.block(0, a.size(), a.size(), t.size() + u.size()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(h.block(a.size(), a.size() + t.size(), t.size(), u.size()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("nested bases never raise a level") {
  const std::vector<double> grid{0.0, 0.25, 1.0, 4.0};
  for (Irrep s : {Irrep::A1g, Irrep::T2g, Irrep::T2u}) {
    CAPTURE(name(s));
    std::vector<EnergyCurve> previous;
    for (int cutoff : {18, 27, 38, 51}) {
      const auto curves = sweep(build_symmetrized_basis(s, enumerate_multiplets(cutoff)), grid);
      for (std::size_t k = 0; k < std::min(previous.size(), curves.size()); ++k)
        for (std::size_t i = 0; i < grid.size(); ++i)
          CHECK(curves[k].samples[i].second <= previous[k].samples[i].second + 1e-12);
      previous = curves;
    }
  }
}

TEST_CASE("second-order splitting of 3A1g and 2T2g") {
  const auto grid = unit_grid(51);
  const auto a1g = sweep(build_symmetrized_basis(Irrep::A1g, kA1gShells), grid);
  const auto t2g = sweep(build_symmetrized_basis(Irrep::T2g, kT2gShells), grid);
  REQUIRE(a1g.size() == 3);
  REQUIRE(t2g.size() == 2);
  const EnergyCurve& e3a1g = a1g[2];
  const EnergyCurve& e2t2g = t2g[1];
  CHECK(std::abs(e3a1g.samples[0].second - 3 * kPi2) <= 1e-10);
  CHECK(std::abs(e2t2g.samples[0].second - 3 * kPi2) <= 1e-10);
  double previous_gap = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double gap = e3a1g.samples[i].second - e2t2g.samples[i].second;
    CAPTURE(grid[i]);
    CHECK(gap > 0.0);
    CHECK(gap > previous_gap);
    previous_gap = gap;
  }
}

TEST_CASE("ground state lies below first-order theory") {
  const std::vector<double> grid{1.0};
  const auto curves = sweep(build_symmetrized_basis(Irrep::A1g, kA1gShells), grid);
  CHECK(curves[0].samples[0].second <= kPi2 + 4 * (kPi2 - 6) / kPi2);
  CHECK(curves[0].samples[0].second <= kPi2 + 1.56835);
}

TEST_CASE("sweep validates its grid") {
  const SymmetrizedBasis b = build_symmetrized_basis(Irrep::A1g, kA1gShells);
  CHECK_THROWS_AS(sweep(b, std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(sweep(b, std::vector<double>{-1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(sweep(b, std::vector<double>{0.5, 0.5}), std::invalid_argument);
  const auto curves = sweep(b, std::vector<double>{0.0});
  REQUIRE(curves.size() == 3);
  CHECK(curves[1].level_index == 2);
  CHECK(curves[1].irrep == Irrep::A1g);
}
