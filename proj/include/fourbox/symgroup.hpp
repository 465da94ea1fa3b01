#ifndef FOURBOX_SYMGROUP_HPP
#define FOURBOX_SYMGROUP_HPP

// The 48-element group of signed 4x4 permutation matrices (S4 x O(1)),
// its identification with O_h, and projection operators on product states.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fourbox/product_state.hpp"
#include "fourbox/rational.hpp"

namespace fourbox {

enum class Irrep { A1g, A2g, Eg, T1g, T2g, A1u, A2u, Eu, T1u, T2u };

inline constexpr std::array<Irrep, 10> kAllIrreps{Irrep::A1g, Irrep::A2g, Irrep::Eg,  Irrep::T1g,
                                                  Irrep::T2g, Irrep::A1u, Irrep::A2u, Irrep::Eu,
                                                  Irrep::T1u, Irrep::T2u};

constexpr std::size_t index_of(Irrep s) { return static_cast<std::size_t>(s); }
int dimension(Irrep s);
std::string_view name(Irrep s);
std::optional<Irrep> parse_irrep(std::string_view text);

/// Irrep -> multiplicity. Only nonzero entries are stored.
using Decomposition = std::map<Irrep, int>;
int total_dimension(const Decomposition& d);
std::string to_string(const Decomposition& d);

using SignedPermutation = Eigen::Matrix<int, 4, 4>;

struct ClassSignature {
  int trace = 0;
  int det = 0;
  int order = 0;
  auto operator<=>(const ClassSignature&) const = default;
};

class GroupElement {
 public:
  /// Throws std::invalid_argument unless m is a signed permutation matrix.
  explicit GroupElement(const SignedPermutation& m);

  const SignedPermutation& matrix() const { return matrix_; }
  int trace() const { return trace_; }
  int det() const { return det_; }
  int order() const { return order_; }
  ClassSignature signature() const { return {trace_, det_, order_}; }

  /// Column holding the nonzero entry of row r, and its sign.
  int column(int r) const { return column_[static_cast<std::size_t>(r)]; }
  int sign(int r) const { return sign_[static_cast<std::size_t>(r)]; }

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  bool operator==(const GroupElement& other) const { return matrix_ == other.matrix_; }

 private:
  SignedPermutation matrix_;
  std::array<int, 4> column_{};
  std::array<int, 4> sign_{};
  int trace_ = 0;
  int det_ = 0;
  int order_ = 0;
};

class AmbiguousClassMatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row permutations of I followed by row permutations of -I.
std::vector<GroupElement> build_group();

/// Conjugacy classes as lists of element indices, ordered by smallest member index.
std::vector<std::vector<std::size_t>> conjugacy_classes(std::span<const GroupElement> group);

ClassSignature class_signature(const GroupElement& e);

/// One column of the O_h character table together with the signature its
/// 4x4 matrix class must have under the action on (q1, q2, q3, q4).
struct OhColumn {
  std::string_view name;
  int size = 0;
  ClassSignature signature;
};

struct CharacterTable {
  std::array<OhColumn, 10> columns;
  /// characters[irrep][column]
  std::array<std::array<int, 10>, 10> characters;

  int character(Irrep s, std::size_t column) const { return characters[index_of(s)][column]; }
};

/// Static O_h character table (columns E, 8C3, 6C2, 6C4, 3C2, i, 6S4, 8S6, 3sh, 6sd).
const CharacterTable& oh_character_table();

struct ClassMatch {
  std::vector<std::vector<std::size_t>> classes;
  /// column_of_class[k] is the O_h column assigned to classes[k].
  std::vector<std::size_t> column_of_class;
  /// Number of signature-consistent assignments examined before the character check.
  int candidates_examined = 0;
};

/// Assigns each matrix class to an O_h column. Candidates are generated from
/// (trace, det, order, size); each is accepted only if every row of the table,
/// read through the assignment, is an irreducible character of the matrix group.
/// Throws AmbiguousClassMatch unless exactly one candidate survives.
ClassMatch match_to_character_table(std::span<const GroupElement> group,
                                     const std::vector<std::vector<std::size_t>>& classes);

/// True iff chi (one value per element) satisfies the irreducible-character
/// functional equation sum_h chi(g h g' h^-1) = (|G|/chi(e)) chi(g) chi(g').
bool is_irreducible_character(std::span<const GroupElement> group, std::span<const int> chi);

/// O_j f(q) = f(M_j^-1 q) applied to a product state: returns (sign, image).
std::pair<int, ProductState> act(const GroupElement& e, const ProductState& s);

struct Projector {
  Irrep irrep = Irrep::A1g;
  /// n_S chi_j(S) / 48 for each group element j.
  std::vector<Rational> coefficients;
};

/// The group with its class structure and per-element characters resolved once.
class SymmetryGroup {
 public:
  SymmetryGroup();

  static const SymmetryGroup& instance();

  std::span<const GroupElement> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const ClassMatch& class_match() const { return match_; }
  std::size_t column_of_element(std::size_t j) const { return column_of_element_[j]; }
  int character(Irrep s, std::size_t j) const;
  std::size_t index_of(const GroupElement& e) const;

  Projector projector(Irrep s) const;

 private:
  std::vector<GroupElement> elements_;
  ClassMatch match_;
  std::vector<std::size_t> column_of_element_;
};

/// P_S v with exact rational coefficients; zero terms are dropped.
StateVector project(const Projector& p, const StateVector& v);
StateVector project(const Projector& p, const ProductState& s);

/// Matrix of the group action on an orbit-closed list of states:
/// O_e basis[c] = R(r, c) basis[r]. Throws std::invalid_argument if the
/// span is not closed under e.
template <typename Scalar>
Matrix<Scalar> representation_matrix(const GroupElement& e, std::span<const ProductState> basis);

/// Projector matrix on an orbit-closed list of states.
template <typename Scalar>
Matrix<Scalar> projector_matrix(const Projector& p, std::span<const ProductState> basis);

/// Irrep content of the span of `states` from the character inner product
/// m_S = (1/48) sum_j chi_j(S) chi_span(j).
Decomposition decompose_span(std::span<const ProductState> states);

/// Irrep content from exact ranks of projector matrices: m_S = rank(P_S) / dim(S).
Decomposition decompose_span_by_rank(std::span<const ProductState> states);

Decomposition decompose_multiplet(std::array<int, 4> multiset);

/// Rank of a rational matrix by exact Gaussian elimination.
Eigen::Index exact_rank(RationalMatrix m);

}  // namespace fourbox

#endif  // FOURBOX_SYMGROUP_HPP
