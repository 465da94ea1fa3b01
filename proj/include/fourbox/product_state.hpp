#ifndef FOURBOX_PRODUCT_STATE_HPP
#define FOURBOX_PRODUCT_STATE_HPP

#include <array>
#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "fourbox/rational.hpp"

namespace fourbox {

/// Box quantum numbers (n1, n2, n3, n4) of phi_n1(q1) phi_n2(q2) phi_n3(q3) phi_n4(q4).
struct ProductState {
  std::array<int, 4> n{1, 1, 1, 1};

  /// n1^2 + n2^2 + n3^2 + n4^2; states with equal shell are degenerate at zero coupling.
  int shell() const { return n[0] * n[0] + n[1] * n[1] + n[2] * n[2] + n[3] * n[3]; }
  bool valid() const { return n[0] >= 1 && n[1] >= 1 && n[2] >= 1 && n[3] >= 1; }

  auto operator<=>(const ProductState&) const = default;
};

std::string to_string(const ProductState& s);
std::ostream& operator<<(std::ostream& os, const ProductState& s);

/// Exact linear combination of product states.
using StateVector = std::map<ProductState, Rational>;

/// All distinct orderings of a quantum-number multiset, in lexicographic order.
std::vector<ProductState> distinct_permutations(std::array<int, 4> multiset);

/// Quantum numbers sorted ascending.
std::array<int, 4> sorted_multiset(const ProductState& s);

}  // namespace fourbox

#endif  // FOURBOX_PRODUCT_STATE_HPP
