#ifndef FOURBOX_BOXBASIS_HPP
#define FOURBOX_BOXBASIS_HPP

// Particle-in-a-box basis phi_n(q) = sin(n pi (q + 1) / 2) on [-1, 1].

#include <numbers>
#include <vector>

#include "fourbox/product_state.hpp"

namespace fourbox {

/// (pi^2 / 4) (n1^2 + n2^2 + n3^2 + n4^2)
inline double e0(const ProductState& s) { return std::numbers::pi * std::numbers::pi / 4.0 * s.shell(); }

/// <phi_m | q | phi_n>. Exactly zero when m + n is even.
double x_elem(int m, int n);

/// <phi_m | q^2 | phi_n>. Exactly zero when m + n is odd.
double x2_elem(int m, int n);

/// <a| sum_{i<j} (q_i - q_j)^2 |b>, the coefficient of lambda in H.
double pair_potential_elem(const ProductState& a, const ProductState& b);

/// All product states sharing one shell integer n1^2 + ... + n4^2.
struct DegenerateMultiplet {
  int shell = 0;
  std::vector<ProductState> members;

  double energy() const { return std::numbers::pi * std::numbers::pi / 4.0 * shell; }
};

/// Every nonempty shell up to the cutoff, ascending; members sorted lexicographically.
/// Throws std::invalid_argument when shell_cutoff < 4.
std::vector<DegenerateMultiplet> enumerate_multiplets(int shell_cutoff);

/// The multiplet of one shell integer (empty members if no state has it).
DegenerateMultiplet multiplet_for_shell(int shell);

/// Distinct quantum-number multisets occurring in a multiplet, ascending.
std::vector<std::array<int, 4>> multisets_of(const DegenerateMultiplet& m);

}  // namespace fourbox

#endif  // FOURBOX_BOXBASIS_HPP
