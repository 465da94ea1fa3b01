#include "fourbox/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fourbox {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 40.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string coord(double v) { return format_significant(v, 6); }

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buf.data(), end);
}

std::string format_significant(double x, int digits) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", digits, x);
  return buf.data();
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_svg(const std::vector<PlotSeries>& series, const PlotOptions& options) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const PlotSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (options.y_range) std::tie(ymin, ymax) = *options.y_range;
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  const double pad = 0.04 * (ymax - ymin);
  if (!options.y_range) ymin -= pad, ymax += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
     << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
     << escape_xml(options.title) << "</text>\n"
     << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\"" << plot_h
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double x = xmin + (xmax - xmin) * i / 5.0;
    const double y = ymin + (ymax - ymin) * i / 5.0;
    os << "<line x1=\"" << coord(px(x)) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << coord(px(x)) << "\" y2=\""
       << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << coord(px(x)) << "\" y=\"" << kTop + plot_h + 20
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << format_significant(x, 4)
       << "</text>\n"
       << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << coord(py(y)) << "\" x2=\"" << kLeft << "\" y2=\""
       << coord(py(y)) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << kLeft - 8 << "\" y=\"" << coord(py(y) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << format_significant(y, 6)
       << "</text>\n";
  }
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << escape_xml(options.x_label)
     << "</text>\n"
     << "<text x=\"20\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"14\" transform=\"rotate(-90 20 "
     << kTop + plot_h / 2 << ")\">" << escape_xml(options.y_label) << "</text>\n";

  os << "<clipPath id=\"plot\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
     << "\" height=\"" << plot_h << "\"/></clipPath>\n<g clip-path=\"url(#plot)\">\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const PlotSeries& s = series[k];
    const char* color = kPalette[k % kPalette.size()];
    if (s.markers) {
      for (const auto& [x, y] : s.points)
        os << "<circle cx=\"" << coord(px(x)) << "\" cy=\"" << coord(py(y)) << "\" r=\"3\" fill=\"none\" stroke=\""
           << color << "\"/>\n";
    } else {
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.points.size(); ++i)
        os << (i ? " " : "") << coord(px(s.points[i].first)) << ',' << coord(py(s.points[i].second));
      os << "\"/>\n";
    }
  }
  os << "</g>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const double y = kTop + 18 + 18.0 * static_cast<double>(k);
    const char* color = kPalette[k % kPalette.size()];
    os << "<line x1=\"" << kWidth - kRight - 140 << "\" y1=\"" << y - 4 << "\" x2=\"" << kWidth - kRight - 115
       << "\" y2=\"" << y - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << kWidth - kRight - 110 << "\" y=\"" << y
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape_xml(series[k].label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fourbox
