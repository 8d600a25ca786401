#include "bvnoise/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace bvnoise {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Round step (1, 2, 5 x 10^k) giving about `count` ticks over [lo, hi].
double nice_step(double lo, double hi, int count) {
  const double raw = (hi - lo) / std::max(1, count);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step = 10.0;
  if (norm <= 1.0) {
    step = 1.0;
  } else if (norm <= 2.0) {
    step = 2.0;
  } else if (norm <= 5.0) {
    step = 5.0;
  }
  return step * mag;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
};

}  // namespace

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

bool uses_log_scale(const LineChart& chart) {
  if (chart.y_scale != YScale::Auto) return chart.y_scale == YScale::Log;
  Range r;
  for (const auto& s : chart.series) {
    for (const auto& [x, y] : s.points) {
      if (y > 0.0 && std::isfinite(y)) r.add(y);
    }
  }
  return !r.empty() && r.hi / r.lo > 1e4;
}

std::string render_svg(const LineChart& chart) {
  const bool log_y = uses_log_scale(chart);
  auto ty = [log_y](double y) { return log_y ? std::log10(y) : y; };
  auto usable = [log_y](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!log_y || y > 0.0);
  };

  Range xr;
  Range yr;
  for (const auto& s : chart.series) {
    for (const auto& [x, y] : s.points) {
      if (!usable(x, y)) continue;
      xr.add(x);
      yr.add(ty(y));
    }
  }
  if (xr.empty()) {
    xr = {0.0, 1.0};
    yr = {0.0, 1.0};
  }
  if (xr.hi == xr.lo) xr = {xr.lo - 0.5, xr.hi + 0.5};
  if (yr.hi == yr.lo) yr = {yr.lo - 0.5, yr.hi + 0.5};
  if (log_y) {
    yr.lo = std::floor(yr.lo);
    yr.hi = std::ceil(yr.hi);
  } else {
    const double step = nice_step(yr.lo, yr.hi, 5);
    yr.lo = std::floor(yr.lo / step) * step;
    yr.hi = std::ceil(yr.hi / step) * step;
  }

  const double left = 80.0, right = 180.0, top = 50.0, bottom = 60.0;
  const double plot_w = chart.width - left - right;
  const double plot_h = chart.height - top - bottom;
  auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(chart.width, "%g")
     << "\" height=\"" << fmt(chart.height, "%g") << "\" viewBox=\"0 0 " << fmt(chart.width, "%g")
     << ' ' << fmt(chart.height, "%g") << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(chart.width, "%g") << "\" height=\""
     << fmt(chart.height, "%g") << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << fmt(left + plot_w / 2) << "\" y=\"25\" text-anchor=\"middle\" font-size=\"15\">"
     << xml_escape(chart.title) << "</text>\n";

  // Axes and ticks.
  os << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  os << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top + plot_h) << "\" x2=\"" << fmt(left + plot_w)
     << "\" y2=\"" << fmt(top + plot_h) << "\"/>\n";
  os << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(left)
     << "\" y2=\"" << fmt(top + plot_h) << "\"/>\n";
  os << "</g>\n";

  os << "<g class=\"x-ticks\" text-anchor=\"middle\">\n";
  const double xstep = nice_step(xr.lo, xr.hi, 6);
  for (double x = std::ceil(xr.lo / xstep) * xstep; x <= xr.hi + 1e-9 * xstep; x += xstep) {
    const double X = px(x);
    os << "<line x1=\"" << fmt(X) << "\" y1=\"" << fmt(top + plot_h) << "\" x2=\"" << fmt(X)
       << "\" y2=\"" << fmt(top + plot_h + 5) << "\" stroke=\"black\"/>";
    os << "<text x=\"" << fmt(X) << "\" y=\"" << fmt(top + plot_h + 18) << "\">"
       << tick_label(std::abs(x) < 1e-12 * xstep ? 0.0 : x) << "</text>\n";
  }
  os << "</g>\n";

  os << "<g class=\"y-ticks\" text-anchor=\"end\">\n";
  const double ystep = log_y ? std::max(1.0, std::ceil((yr.hi - yr.lo) / 8.0)) : nice_step(yr.lo, yr.hi, 5);
  for (double y = yr.lo; y <= yr.hi + 1e-9 * ystep; y += ystep) {
    const double Y = py(y);
    const std::string label =
        log_y ? "1e" + tick_label(std::round(y)) : tick_label(std::abs(y) < 1e-12 * ystep ? 0.0 : y);
    os << "<line x1=\"" << fmt(left - 5) << "\" y1=\"" << fmt(Y) << "\" x2=\"" << fmt(left)
       << "\" y2=\"" << fmt(Y) << "\" stroke=\"black\"/>";
    os << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(Y + 4) << "\">" << label << "</text>\n";
  }
  os << "</g>\n";

  os << "<text x=\"" << fmt(left + plot_w / 2) << "\" y=\"" << fmt(chart.height - 15)
     << "\" text-anchor=\"middle\">" << xml_escape(chart.x_label) << "</text>\n";
  os << "<text x=\"20\" y=\"" << fmt(top + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
     << fmt(top + plot_h / 2) << ")\">" << xml_escape(chart.y_label) << (log_y ? " (log scale)" : "")
     << "</text>\n";

  for (std::size_t i = 0; i < chart.series.size(); ++i) {
    const auto& s = chart.series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [x, y] : s.points) {
      if (!usable(x, y)) continue;
      if (!first) os << ' ';
      os << fmt(px(x)) << ',' << fmt(py(ty(y)));
      first = false;
    }
    os << "\"/>\n";
  }

  os << "<g class=\"legend\">\n";
  for (std::size_t i = 0; i < chart.series.size(); ++i) {
    const double y = top + 10.0 + 20.0 * static_cast<double>(i);
    const double x = left + plot_w + 15.0;
    const char* color = kPalette[i % std::size(kPalette)];
    os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x + 25) << "\" y2=\""
       << fmt(y) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>";
    os << "<text x=\"" << fmt(x + 32) << "\" y=\"" << fmt(y + 4) << "\">" << xml_escape(chart.series[i].name)
       << "</text>\n";
  }
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace bvnoise
