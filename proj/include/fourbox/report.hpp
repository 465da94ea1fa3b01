#ifndef FOURBOX_REPORT_HPP
#define FOURBOX_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fourbox {

/// Shortest decimal that round-trips to x.
std::string format_double(double x);

/// printf-style %.{digits}g
std::string format_significant(double x, int digits);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool markers = false;  // circles instead of a polyline
};

struct PlotOptions {
  std::string title;
  std::string x_label = "lambda";
  std::string y_label = "E";
  std::optional<std::pair<double, double>> y_range;
};

/// Standalone SVG 1.1 line plot in an 800x600 viewBox with an embedded legend.
std::string render_svg(const std::vector<PlotSeries>& series, const PlotOptions& options);

}  // namespace fourbox

#endif  // FOURBOX_REPORT_HPP
