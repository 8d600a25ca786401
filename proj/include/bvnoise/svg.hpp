#ifndef BVNOISE_SVG_HPP_
#define BVNOISE_SVG_HPP_

#include <string>
#include <utility>
#include <vector>

namespace bvnoise {

enum class YScale { Auto, Linear, Log };

struct ChartSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<ChartSeries> series;
  YScale y_scale = YScale::Auto;
  double width = 800.0;
  double height = 500.0;
};

/// Auto picks log when the positive y values span more than 4 decades.
bool uses_log_scale(const LineChart& chart);

/// Standalone SVG 1.1 document: one <polyline> per series, axes with tick
/// labels, axis titles and a legend. No external references. In log mode,
/// points with y <= 0 are dropped.
std::string render_svg(const LineChart& chart);

/// Escapes &, <, >, " for text and attribute content.
std::string xml_escape(const std::string& text);

}  // namespace bvnoise

#endif  // BVNOISE_SVG_HPP_
