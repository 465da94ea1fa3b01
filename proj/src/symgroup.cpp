#include "fourbox/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <type_traits>

namespace fourbox {

namespace {

constexpr int kGroupOrder = 48;

constexpr std::array<std::string_view, 10> kIrrepNames{"A1g", "A2g", "Eg",  "T1g", "T2g",
                                                       "A1u", "A2u", "Eu",  "T1u", "T2u"};
constexpr std::array<int, 10> kIrrepDims{1, 1, 2, 3, 3, 1, 1, 2, 3, 3};

// Compact code of a signed permutation: per row, 2*column + (sign > 0).
int element_code(const GroupElement& e) {
  int code = 0;
  for (int r = 0; r < 4; ++r) code = code * 8 + 2 * e.column(r) + (e.sign(r) > 0 ? 1 : 0);
  return code;
}

struct Tables {
  std::vector<std::vector<std::size_t>> product;
  std::vector<std::size_t> inverse;
};

Tables multiplication_tables(std::span<const GroupElement> group) {
  std::map<int, std::size_t> lookup;
  for (std::size_t i = 0; i < group.size(); ++i) lookup[element_code(group[i])] = i;
  auto find = [&](const GroupElement& e) {
    auto it = lookup.find(element_code(e));
    if (it == lookup.end()) throw std::logic_error("group is not closed under multiplication");
    return it->second;
  };
  Tables t;
  t.product.assign(group.size(), std::vector<std::size_t>(group.size()));
  t.inverse.resize(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    t.inverse[i] = find(group[i].inverse());
    for (std::size_t j = 0; j < group.size(); ++j) t.product[i][j] = find(group[i] * group[j]);
  }
  return t;
}

std::size_t identity_index(std::span<const GroupElement> group) {
  for (std::size_t i = 0; i < group.size(); ++i)
    if (group[i].matrix() == SignedPermutation::Identity()) return i;
  throw std::logic_error("group has no identity");
}

bool irreducible_character(const Tables& t, std::size_t e, std::span<const int> chi) {
  const std::size_t n = chi.size();
  const int dim = chi[e];
  if (dim <= 0) return false;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t g2 = 0; g2 < n; ++g2) {
      long sum = 0;
      for (std::size_t h = 0; h < n; ++h) sum += chi[t.product[t.product[t.product[g][h]][g2]][t.inverse[h]]];
      if (dim * sum != static_cast<long>(n) * chi[g] * chi[g2]) return false;
    }
  }
  return true;
}

}  // namespace

int dimension(Irrep s) { return kIrrepDims[index_of(s)]; }

std::string_view name(Irrep s) { return kIrrepNames[index_of(s)]; }

std::optional<Irrep> parse_irrep(std::string_view text) {
  for (Irrep s : kAllIrreps)
    if (name(s) == text) return s;
  return std::nullopt;
}

int total_dimension(const Decomposition& d) {
  int total = 0;
  for (const auto& [s, m] : d) total += m * dimension(s);
  return total;
}

std::string to_string(const Decomposition& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, m] : d) {
    if (!first) os << ' ';
    os << name(s) << ':' << m;
    first = false;
  }
  return os.str();
}

GroupElement::GroupElement(const SignedPermutation& m) : matrix_(m) {
  for (int r = 0; r < 4; ++r) {
    int nonzero = 0;
    for (int c = 0; c < 4; ++c) {
      const int v = m(r, c);
      if (v == 0) continue;
      if (v != 1 && v != -1) throw std::invalid_argument("entries must be in {-1, 0, 1}");
      ++nonzero;
      column_[static_cast<std::size_t>(r)] = c;
      sign_[static_cast<std::size_t>(r)] = v;
    }
    if (nonzero != 1) throw std::invalid_argument("each row needs exactly one nonzero entry");
  }
  for (int c = 0; c < 4; ++c)
    if (m.col(c).cwiseAbs().sum() != 1) throw std::invalid_argument("each column needs exactly one nonzero entry");

  trace_ = m.trace();
  // det = sign(permutation) * product of signs
  std::array<int, 4> perm = column_;
  int parity = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (perm[i] > perm[j]) parity = -parity;
  det_ = parity * sign_[0] * sign_[1] * sign_[2] * sign_[3];

  SignedPermutation power = m;
  order_ = 1;
  while (power != SignedPermutation::Identity()) {
    power = power * m;
    ++order_;
  }
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  return GroupElement(matrix_ * other.matrix_);
}

GroupElement GroupElement::inverse() const { return GroupElement(matrix_.transpose()); }

std::vector<GroupElement> build_group() {
  std::vector<GroupElement> group;
  group.reserve(kGroupOrder);
  for (int sign : {1, -1}) {
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      SignedPermutation m = SignedPermutation::Zero();
      for (int r = 0; r < 4; ++r) m(r, perm[static_cast<std::size_t>(r)]) = sign;
      group.emplace_back(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return group;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(std::span<const GroupElement> group) {
  const Tables t = multiplication_tables(group);
  std::vector<int> class_of(group.size(), -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (class_of[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < group.size(); ++k) {
      const std::size_t j = t.product[t.product[k][i]][t.inverse[k]];
      if (class_of[j] < 0) {
        class_of[j] = id;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

ClassSignature class_signature(const GroupElement& e) { return e.signature(); }

const CharacterTable& oh_character_table() {
  static const CharacterTable table{
      {{{"E", 1, {4, 1, 1}},
        {"8C3", 8, {1, 1, 3}},
        {"6C2", 6, {2, -1, 2}},
        {"6C4", 6, {0, -1, 4}},
        {"3C2", 3, {0, 1, 2}},
        {"i", 1, {-4, 1, 2}},
        {"6S4", 6, {0, -1, 4}},
        {"8S6", 8, {-1, 1, 6}},
        {"3sh", 3, {0, 1, 2}},
        {"6sd", 6, {-2, -1, 2}}}},
      {{
          {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},           // A1g
          {1, 1, -1, -1, 1, 1, -1, 1, 1, -1},       // A2g
          {2, -1, 0, 0, 2, 2, 0, -1, 2, 0},         // Eg
          {3, 0, -1, 1, -1, 3, 1, 0, -1, -1},       // T1g
          {3, 0, 1, -1, -1, 3, -1, 0, -1, 1},       // T2g
          {1, 1, 1, 1, 1, -1, -1, -1, -1, -1},      // A1u
          {1, 1, -1, -1, 1, -1, 1, -1, -1, 1},      // A2u
          {2, -1, 0, 0, 2, -2, 0, 1, -2, 0},        // Eu
          {3, 0, -1, 1, -1, -3, -1, 0, 1, 1},       // T1u
          {3, 0, 1, -1, -1, -3, 1, 0, 1, -1},       // T2u
      }}};
  return table;
}

bool is_irreducible_character(std::span<const GroupElement> group, std::span<const int> chi) {
  if (chi.size() != group.size()) throw std::invalid_argument("one character value per element required");
  return irreducible_character(multiplication_tables(group), identity_index(group), chi);
}

ClassMatch match_to_character_table(std::span<const GroupElement> group,
                                     const std::vector<std::vector<std::size_t>>& classes) {
  const CharacterTable& table = oh_character_table();
  if (classes.size() != table.columns.size())
    throw AmbiguousClassMatch("expected 10 classes, found " + std::to_string(classes.size()));

  std::vector<std::vector<std::size_t>> options(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const ClassSignature sig = group[classes[k].front()].signature();
    for (std::size_t col = 0; col < table.columns.size(); ++col) {
      const OhColumn& c = table.columns[col];
      if (c.signature == sig && c.size == static_cast<int>(classes[k].size())) options[k].push_back(col);
    }
    if (options[k].empty()) throw AmbiguousClassMatch("no O_h column matches a class signature");
  }

  const Tables t = multiplication_tables(group);
  const std::size_t e = identity_index(group);

  auto consistent = [&](const std::vector<std::size_t>& column_of_class) {
    std::vector<std::size_t> col_of_elem(group.size());
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (std::size_t j : classes[k]) col_of_elem[j] = column_of_class[k];
    std::array<std::vector<int>, 10> chis;
    for (Irrep s : kAllIrreps) {
      auto& chi = chis[index_of(s)];
      chi.resize(group.size());
      for (std::size_t j = 0; j < group.size(); ++j) chi[j] = table.character(s, col_of_elem[j]);
    }
    for (std::size_t a = 0; a < 10; ++a) {
      for (std::size_t b = 0; b < 10; ++b) {
        long dot = 0;
        for (std::size_t j = 0; j < group.size(); ++j) dot += chis[a][j] * chis[b][j];
        if (dot != (a == b ? static_cast<long>(group.size()) : 0L)) return false;
      }
    }
    for (const auto& chi : chis)
      if (!irreducible_character(t, e, chi)) return false;
    return true;
  };

  std::vector<std::vector<std::size_t>> survivors;
  std::vector<std::size_t> current(classes.size());
  std::vector<bool> used(table.columns.size(), false);
  int examined = 0;
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == classes.size()) {
      ++examined;
      if (consistent(current)) survivors.push_back(current);
      return;
    }
    for (std::size_t col : options[k]) {
      if (used[col]) continue;
      used[col] = true;
      current[k] = col;
      self(self, k + 1);
      used[col] = false;
    }
  };
  search(search, 0);

  if (survivors.size() != 1)
    throw AmbiguousClassMatch(std::to_string(survivors.size()) + " consistent class assignments out of " +
                              std::to_string(examined));
  return ClassMatch{classes, survivors.front(), examined};
}

std::pair<int, ProductState> act(const GroupElement& e, const ProductState& s) {
  ProductState image;
  int sign = 1;
  for (int r = 0; r < 4; ++r) {
    const int n = s.n[static_cast<std::size_t>(e.column(r))];
    image.n[static_cast<std::size_t>(r)] = n;
    if (e.sign(r) < 0 && n % 2 == 0) sign = -sign;
  }
  return {sign, image};
}

SymmetryGroup::SymmetryGroup() : elements_(build_group()) {
  match_ = match_to_character_table(elements_, conjugacy_classes(elements_));
  column_of_element_.resize(elements_.size());
  for (std::size_t k = 0; k < match_.classes.size(); ++k)
    for (std::size_t j : match_.classes[k]) column_of_element_[j] = match_.column_of_class[k];
}

const SymmetryGroup& SymmetryGroup::instance() {
  static const SymmetryGroup group;
  return group;
}

int SymmetryGroup::character(Irrep s, std::size_t j) const {
  return oh_character_table().character(s, column_of_element_[j]);
}

std::size_t SymmetryGroup::index_of(const GroupElement& e) const {
  for (std::size_t j = 0; j < elements_.size(); ++j)
    if (elements_[j] == e) return j;
  throw std::invalid_argument("element is not in the group");
}

Projector SymmetryGroup::projector(Irrep s) const {
  Projector p{s, {}};
  p.coefficients.reserve(elements_.size());
  for (std::size_t j = 0; j < elements_.size(); ++j)
    p.coefficients.emplace_back(dimension(s) * character(s, j), static_cast<std::int64_t>(elements_.size()));
  return p;
}

StateVector project(const Projector& p, const StateVector& v) {
  const auto group = SymmetryGroup::instance().elements();
  StateVector out;
  for (std::size_t j = 0; j < group.size(); ++j) {
    const Rational& c = p.coefficients[j];
    if (c == Rational(0)) continue;
    for (const auto& [state, coeff] : v) {
      auto [sign, image] = act(group[j], state);
      out[image] += c * coeff * Rational(sign);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == Rational(0); });
  return out;
}

StateVector project(const Projector& p, const ProductState& s) { return project(p, StateVector{{s, Rational(1)}}); }

template <typename Scalar>
Matrix<Scalar> representation_matrix(const GroupElement& e, std::span<const ProductState> basis) {
  std::map<ProductState, Eigen::Index> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = static_cast<Eigen::Index>(i);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Matrix<Scalar> r = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    auto [sign, image] = act(e, basis[static_cast<std::size_t>(c)]);
    auto it = position.find(image);
    if (it == position.end()) throw std::invalid_argument("state span is not closed under the group action");
    r(it->second, c) = Scalar(sign);
  }
  return r;
}

template <typename Scalar>
Matrix<Scalar> projector_matrix(const Projector& p, std::span<const ProductState> basis) {
  const auto group = SymmetryGroup::instance().elements();
  const auto n = static_cast<Eigen::Index>(basis.size());
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (std::size_t j = 0; j < group.size(); ++j) {
    if (p.coefficients[j] == Rational(0)) continue;
    Scalar c;
    if constexpr (std::is_same_v<Scalar, Rational>)
      c = p.coefficients[j];
    else
      c = static_cast<Scalar>(to_double(p.coefficients[j]));
    m += c * representation_matrix<Scalar>(group[j], basis);
  }
  return m;
}

template Matrix<Rational> representation_matrix<Rational>(const GroupElement&, std::span<const ProductState>);
template Matrix<double> representation_matrix<double>(const GroupElement&, std::span<const ProductState>);
template Matrix<Rational> projector_matrix<Rational>(const Projector&, std::span<const ProductState>);
template Matrix<double> projector_matrix<double>(const Projector&, std::span<const ProductState>);

Decomposition decompose_span(std::span<const ProductState> states) {
  const SymmetryGroup& g = SymmetryGroup::instance();
  std::vector<int> chi_span(g.size(), 0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (const ProductState& s : states) {
      auto [sign, image] = act(g.elements()[j], s);
      if (image == s) chi_span[j] += sign;
    }
  }
  Decomposition d;
  for (Irrep s : kAllIrreps) {
    long sum = 0;
    for (std::size_t j = 0; j < g.size(); ++j) sum += g.character(s, j) * chi_span[j];
    if (sum % static_cast<long>(g.size()) != 0) throw std::logic_error("non-integral irrep multiplicity");
    if (const long m = sum / static_cast<long>(g.size()); m != 0) d[s] = static_cast<int>(m);
  }
  return d;
}

Eigen::Index exact_rank(RationalMatrix m) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r) {
      if (m(r, col) != Rational(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == Rational(0)) continue;
      const Rational f = m(r, col) / m(rank, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

Decomposition decompose_span_by_rank(std::span<const ProductState> states) {
  const SymmetryGroup& g = SymmetryGroup::instance();
  Decomposition d;
  for (Irrep s : kAllIrreps) {
    const Eigen::Index rank = exact_rank(projector_matrix<Rational>(g.projector(s), states));
    if (rank % dimension(s) != 0) throw std::logic_error("projector rank is not a multiple of the irrep dimension");
    if (rank != 0) d[s] = static_cast<int>(rank / dimension(s));
  }
  return d;
}

Decomposition decompose_multiplet(std::array<int, 4> multiset) {
  const auto states = distinct_permutations(multiset);
  return decompose_span(states);
}

}  // namespace fourbox
