#ifndef FOURBOX_TESTS_REFERENCE_LEVELS_HPP
#define FOURBOX_TESTS_REFERENCE_LEVELS_HPP

// Closed-form first-order coefficients of lambda for the lowest levels.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace reference {

struct Level {
  std::string label;
  int shell;
  double e1;
};

inline std::vector<Level> first_order_levels() {
  const double p2 = std::numbers::pi * std::numbers::pi;
  const double p4 = p2 * p2;
  const double s15 = 6144.0 * std::sqrt(424321.0);
  const double s18 = 6144.0 * std::sqrt(53329.0);
  return {
      {"1A1g", 4, 4.0 * (p2 - 6.0) / p2},
      {"1A1u", 7, (216 * p4 - 1053 * p2 - 4096) / (54 * p4)},
      {"1T2u", 7, (648 * p4 - 3159 * p2 + 4096) / (162 * p4)},
      {"2A1g", 10, (324 * p4 - 1215 * p2 - 8192) / (81 * p4)},
      {"1T2g", 10, (4 * p2 - 15) / p2},
      {"1Eg", 10, (324 * p4 - 1215 * p2 + 4096) / (81 * p4)},
      {"3A1g", 12, 4 * (3 * p2 - 14) / (3 * p2)},
      {"2T2g", 12, 4 * (3 * p2 - 14) / (3 * p2)},
      {"2A1u", 13, (216 * p4 - 567 * p2 - 4096) / (54 * p4)},
      {"2T2u", 13, (648 * p4 - 1701 * p2 + 4096) / (162 * p4)},
      {"3A1u", 15, (405000 * p4 - 1434375 * p2 - 8105984) / (101250 * p4)},
      {"3T2u", 15, (405000 * p4 - 1434375 * p2 - s15 - 1280000) / (101250 * p4)},
      {"1Eu", 15, (405000 * p4 - 1434375 * p2 - 425984) / (101250 * p4)},
      {"4T2u", 15, (405000 * p4 - 1434375 * p2 + s15 - 1280000) / (101250 * p4)},
      {"1T1u", 15, (405000 * p4 - 1434375 * p2 + 5545984) / (101250 * p4)},
      {"4A1g", 16, 2 * (2 * p2 - 3) / p2},
      {"5A1g", 18, (202500 * p4 - 489375 * p2 - 5545984) / (50625 * p4)},
      {"3T2g", 18, (202500 * p4 - 489375 * p2 - s18 - 1386496) / (50625 * p4)},
      {"4T2g", 18, (202500 * p4 - 489375 * p2 + s18 - 1386496) / (50625 * p4)},
      {"1T1g", 18, (202500 * p4 - 489375 * p2 + 2772992) / (50625 * p4)},
      {"2Eg", 18, (202500 * p4 - 489375 * p2 + 2772992) / (50625 * p4)},
  };
}

}  // namespace reference

#endif
