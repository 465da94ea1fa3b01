#ifndef FOURBOX_REFERENCE_TABLE_HPP
#define FOURBOX_REFERENCE_TABLE_HPP

// Published multiplet decompositions through shell 22, kept verbatim
// (including two known misprints) so computed rows can be checked against them.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "fourbox/symgroup.hpp"

namespace fourbox {

struct ReferenceRow {
  std::array<int, 4> multiset;
  int printed_count;
  std::vector<std::string> printed_labels;  // e.g. "3A1g"
};

std::span<const ReferenceRow> reference_decomposition_table();

/// Irrep content read off the printed labels, one copy per label.
Decomposition printed_content(const ReferenceRow& row);

struct MultisetCheck {
  std::array<int, 4> multiset{};
  int shell = 0;
  int computed_count = 0;
  Decomposition computed;
  const ReferenceRow* reference = nullptr;
  std::vector<std::string> discrepancies;

  bool flagged() const { return !discrepancies.empty(); }
};

MultisetCheck check_multiset(const std::array<int, 4>& multiset);

}  // namespace fourbox

#endif  // FOURBOX_REFERENCE_TABLE_HPP
