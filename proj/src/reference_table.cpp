#include "fourbox/reference_table.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fourbox/product_state.hpp"

namespace fourbox {

std::span<const ReferenceRow> reference_decomposition_table() {
  static const std::vector<ReferenceRow> rows{
      {{1, 1, 1, 1}, 1, {"1A1g"}},
      {{1, 1, 1, 2}, 3, {"1A1u", "1T2u"}},
      {{1, 1, 2, 2}, 6, {"2A1g", "1T2g", "1Eg"}},
      {{1, 1, 1, 3}, 4, {"3A1g", "2T2g"}},
      {{1, 2, 2, 2}, 4, {"2A1u", "2T2u"}},
      {{1, 1, 2, 3}, 12, {"3A1u", "3T2u", "1Eu", "4T2u", "1T1u"}},
      {{2, 2, 2, 2}, 1, {"4A1g"}},
      {{1, 2, 2, 3}, 12, {"5A1g", "3T2g", "4T2g", "2Eg", "1T1g"}},
      {{1, 1, 1, 4}, 4, {"4A1u", "5T2u"}},
      {{1, 1, 3, 3}, 6, {"6A1g", "3Eg", "5T2g"}},
      {{2, 2, 2, 3}, 4, {"5A1u", "6T2u"}},
      {{1, 1, 2, 4}, 12, {"7A1g", "2T1g", "6T2g", "4Eg", "2T1g"}},
  };
  return rows;
}

Decomposition printed_content(const ReferenceRow& row) {
  Decomposition d;
  for (const std::string& label : row.printed_labels) {
    std::size_t k = 0;
    while (k < label.size() && std::isdigit(static_cast<unsigned char>(label[k]))) ++k;
    const auto irrep = parse_irrep(std::string_view(label).substr(k));
    if (!irrep) throw std::logic_error("bad reference label " + label);
    ++d[*irrep];
  }
  return d;
}

MultisetCheck check_multiset(const std::array<int, 4>& multiset) {
  MultisetCheck check;
  check.multiset = multiset;
  std::sort(check.multiset.begin(), check.multiset.end());
  const auto states = distinct_permutations(check.multiset);
  check.shell = states.front().shell();
  check.computed_count = static_cast<int>(states.size());
  check.computed = decompose_span(states);

  for (const ReferenceRow& row : reference_decomposition_table())
    if (row.multiset == check.multiset) check.reference = &row;
  if (!check.reference) return check;

  const ReferenceRow& row = *check.reference;
  if (row.printed_count != check.computed_count)
    check.discrepancies.push_back("printed count " + std::to_string(row.printed_count) + " vs computed " +
                                  std::to_string(check.computed_count));
  std::set<std::string> seen;
  for (const std::string& label : row.printed_labels)
    if (!seen.insert(label).second) check.discrepancies.push_back("label " + label + " printed twice");
  const Decomposition printed = printed_content(row);
  if (printed != check.computed)
    check.discrepancies.push_back("printed content " + to_string(printed) + " vs computed " +
                                  to_string(check.computed));
  return check;
}

}  // namespace fourbox
