#include "fourbox/boxbasis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fourbox {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

// Largest n with n^2 <= s.
int isqrt(int s) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(s)));
  while (r * r > s) --r;
  while ((r + 1) * (r + 1) <= s) ++r;
  return r;
}

}  // namespace

std::string to_string(const ProductState& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ProductState& s) {
  return os << '(' << s.n[0] << ',' << s.n[1] << ',' << s.n[2] << ',' << s.n[3] << ')';
}

std::vector<ProductState> distinct_permutations(std::array<int, 4> multiset) {
  std::sort(multiset.begin(), multiset.end());
  std::vector<ProductState> out;
  do {
    out.push_back(ProductState{multiset});
  } while (std::next_permutation(multiset.begin(), multiset.end()));
  return out;
}

std::array<int, 4> sorted_multiset(const ProductState& s) {
  std::array<int, 4> m = s.n;
  std::sort(m.begin(), m.end());
  return m;
}

// With t = (q + 1) / 2 the integrals reduce to int_0^1 t^k cos(j pi t) dt.
double x_elem(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("quantum numbers start at 1");
  if ((m + n) % 2 == 0) return 0.0;
  const double d = static_cast<double>(m * m - n * n);
  return -16.0 * m * n / (kPi2 * d * d);
}

double x2_elem(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("quantum numbers start at 1");
  if ((m + n) % 2 != 0) return 0.0;
  if (m == n) return 1.0 / 3.0 - 2.0 / (kPi2 * n * n);
  const double d = static_cast<double>(m * m - n * n);
  return 32.0 * m * n / (kPi2 * d * d);
}

// sum_{i<j} (q_i - q_j)^2 = 3 sum_i q_i^2 - 2 sum_{i<j} q_i q_j
double pair_potential_elem(const ProductState& a, const ProductState& b) {
  std::array<bool, 4> same{};
  int mismatches = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    same[i] = a.n[i] == b.n[i];
    if (!same[i]) ++mismatches;
  }
  if (mismatches > 2) return 0.0;

  double single = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    bool others_match = true;
    for (std::size_t k = 0; k < 4; ++k)
      if (k != i && !same[k]) others_match = false;
    if (others_match) single += x2_elem(a.n[i], b.n[i]);
  }

  double cross = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      bool others_match = true;
      for (std::size_t k = 0; k < 4; ++k)
        if (k != i && k != j && !same[k]) others_match = false;
      if (others_match) cross += x_elem(a.n[i], b.n[i]) * x_elem(a.n[j], b.n[j]);
    }
  }
  return 3.0 * single - 2.0 * cross;
}

std::vector<DegenerateMultiplet> enumerate_multiplets(int shell_cutoff) {
  if (shell_cutoff < 4) throw std::invalid_argument("shell cutoff must be at least 4");
  const int nmax = isqrt(shell_cutoff - 3);
  std::map<int, std::vector<ProductState>> by_shell;
  ProductState s;
  for (s.n[0] = 1; s.n[0] <= nmax; ++s.n[0])
    for (s.n[1] = 1; s.n[1] <= nmax; ++s.n[1])
      for (s.n[2] = 1; s.n[2] <= nmax; ++s.n[2])
        for (s.n[3] = 1; s.n[3] <= nmax; ++s.n[3])
          if (s.shell() <= shell_cutoff) by_shell[s.shell()].push_back(s);

  std::vector<DegenerateMultiplet> out;
  out.reserve(by_shell.size());
  for (auto& [shell, members] : by_shell) {
    std::sort(members.begin(), members.end());
    out.push_back({shell, std::move(members)});
  }
  return out;
}

DegenerateMultiplet multiplet_for_shell(int shell) {
  if (shell < 4) return {shell, {}};
  auto all = enumerate_multiplets(shell);
  if (all.back().shell == shell) return all.back();
  return {shell, {}};
}

std::vector<std::array<int, 4>> multisets_of(const DegenerateMultiplet& m) {
  std::set<std::array<int, 4>> seen;
  for (const ProductState& s : m.members) seen.insert(sorted_multiset(s));
  return {seen.begin(), seen.end()};
}

}  // namespace fourbox
