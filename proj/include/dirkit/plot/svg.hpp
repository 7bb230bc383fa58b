#pragma once

// Self-contained SVG figures: line plots (log or linear x) and an
// equirectangular balloon map. The second line of every document is a
// version comment; everything else depends only on the data and options.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "../directivity.hpp"
#include "series.hpp"

namespace dirkit::plot {

inline constexpr const char* kSvgVersion = "dirkit 0.1.0";

struct SvgOptions {
  std::string title;
  std::string xLabel;  ///< empty: derived from the axis kind
  std::string yLabel;  ///< empty: derived from the series quantity
  int width = 800;
  int height = 480;
};

namespace svg_detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string tickLabel(double v) {
  char buf[32];
  if (std::abs(v) >= 1000.0 && std::fmod(v, 1000.0) == 0.0) {
    std::snprintf(buf, sizeof buf, "%gk", v / 1000.0);
  } else {
    std::snprintf(buf, sizeof buf, "%g", v);
  }
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

inline std::vector<double> linearTicks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> out;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step) {
    out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return out;
}

inline std::vector<double> logTicks(double lo, double hi) {
  std::vector<double> out;
  for (int e = static_cast<int>(std::floor(std::log10(lo))); e <= static_cast<int>(std::ceil(std::log10(hi))); ++e) {
    for (double m : {1.0, 2.0, 5.0}) {
      const double t = m * std::pow(10.0, e);
      if (t >= lo * (1 - 1e-12) && t <= hi * (1 + 1e-12)) out.push_back(t);
    }
  }
  return out;
}

inline const std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

inline std::string header(const SvgOptions& o) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(o.width) +
         "\" height=\"" + std::to_string(o.height) + "\" viewBox=\"0 0 " +
         std::to_string(o.width) + " " + std::to_string(o.height) + "\">\n<!-- " + kSvgVersion +
         " -->\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

// Approximate viridis, t in [0, 1].
inline std::string colormap(double t) {
  static constexpr std::array<std::array<double, 3>, 5> stops = {{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * 4.0;
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), 3);
  const double f = t - static_cast<double>(i);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(stops[i][0] + f * (stops[i + 1][0] - stops[i][0]))),
                static_cast<int>(std::lround(stops[i][1] + f * (stops[i + 1][1] - stops[i][1]))),
                static_cast<int>(std::lround(stops[i][2] + f * (stops[i + 1][2] - stops[i][2]))));
  return buf;
}

}  // namespace svg_detail

/// Overlay of one or more series on shared axes.
inline std::string seriesSvg(const std::vector<PlotSeries>& series, const SvgOptions& opt = {}) {
  using namespace svg_detail;
  if (series.empty()) throw DomainError("svg: no series to draw");
  const bool logX = series.front().xAxis() == XAxis::FrequencyLog;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points()) {
      if (logX && !(x > 0.0)) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!(xmin <= xmax)) {
    xmin = logX ? 1.0 : 0.0;
    xmax = logX ? 10.0 : 1.0;
    ymin = 0.0;
    ymax = 1.0;
  }
  if (xmin == xmax) {
    xmin = logX ? xmin / 2.0 : xmin - 1.0;
    xmax = logX ? xmax * 2.0 : xmax + 1.0;
  }
  if (ymin == ymax) {
    const double pad = std::max(1.0, std::abs(ymin) * 0.1);
    ymin -= pad;
    ymax += pad;
  } else {
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
  }

  const double left = 70, right = 20, top = opt.title.empty() ? 20 : 40, bottom = 50;
  const double pw = opt.width - left - right, ph = opt.height - top - bottom;
  auto px = [&](double x) {
    const double t = logX ? (std::log10(x) - std::log10(xmin)) / (std::log10(xmax) - std::log10(xmin))
                          : (x - xmin) / (xmax - xmin);
    return left + t * pw;
  };
  auto py = [&](double y) { return top + (1.0 - (y - ymin) / (ymax - ymin)) * ph; };

  std::string out = header(opt);
  if (!opt.title.empty()) {
    out += "<text x=\"" + num(opt.width / 2.0) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" font-family=\"sans-serif\">" +
           escape(opt.title) + "</text>\n";
  }
  out += "<g font-family=\"sans-serif\" font-size=\"11\" stroke-linecap=\"round\">\n";
  for (double t : logX ? logTicks(xmin, xmax) : linearTicks(xmin, xmax)) {
    const double x = px(t);
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(top) + "\" x2=\"" + num(x) + "\" y2=\"" +
           num(top + ph) + "\" stroke=\"#e0e0e0\"/>\n";
    out += "<text x=\"" + num(x) + "\" y=\"" + num(top + ph + 16) + "\" text-anchor=\"middle\">" +
           tickLabel(t) + "</text>\n";
  }
  for (double t : linearTicks(ymin, ymax)) {
    const double y = py(t);
    out += "<line x1=\"" + num(left) + "\" y1=\"" + num(y) + "\" x2=\"" + num(left + pw) +
           "\" y2=\"" + num(y) + "\" stroke=\"#e0e0e0\"/>\n";
    out += "<text x=\"" + num(left - 6) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\">" +
           tickLabel(t) + "</text>\n";
  }
  out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) +
         "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  const std::string xl = opt.xLabel.empty() ? axisName(series.front().xAxis()) : opt.xLabel;
  const std::string yl = opt.yLabel.empty() ? series.front().yName() : opt.yLabel;
  out += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(opt.height - 12.0) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + escape(xl) + "</text>\n";
  out += "<text transform=\"translate(18," + num(top + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" + escape(yl) + "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    std::string pts;
    for (const auto& [x, y] : series[i].points()) {
      if (logX && !(x > 0.0)) continue;
      if (!pts.empty()) pts += ' ';
      pts += num(px(x)) + "," + num(py(y));
    }
    out += std::string("<polyline fill=\"none\" stroke=\"") + color +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    const double ly = top + 14.0 + 16.0 * static_cast<double>(i);
    out += "<line x1=\"" + num(left + pw - 150) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
           num(left + pw - 130) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + num(left + pw - 125) + "\" y=\"" + num(ly) + "\">" +
           escape(series[i].label()) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

/// Equirectangular map of a balloon: azimuth across, elevation up.
inline std::string balloonSvg(const BalloonGrid& g, const std::string& quantity,
                              const SvgOptions& opt = {}) {
  using namespace svg_detail;
  if (g.values.empty()) throw DomainError("svg: empty balloon");
  const auto [lo, hi] = std::minmax_element(g.values.begin(), g.values.end());
  const double vmin = *lo, vmax = *hi > *lo ? *hi : *lo + 1.0;

  // cell size from the finest spacing present
  double azStep = 360.0, elStep = 180.0;
  for (std::size_t i = 0; i < g.directions.size(); ++i) {
    for (std::size_t j = i + 1; j < g.directions.size(); ++j) {
      const double da = std::abs(g.directions[i].azimuth() - g.directions[j].azimuth());
      const double de = std::abs(g.directions[i].elevation() - g.directions[j].elevation());
      if (de == 0.0 && da > 0.0) azStep = std::min(azStep, da);
      if (de > 0.0) elStep = std::min(elStep, de);
    }
  }

  const double left = 60, right = 90, top = opt.title.empty() ? 20 : 40, bottom = 50;
  const double pw = opt.width - left - right, ph = opt.height - top - bottom;
  auto px = [&](double az) { return left + az / 360.0 * pw; };
  auto py = [&](double el) { return top + (90.0 - el) / 180.0 * ph; };

  std::string out = header(opt);
  if (!opt.title.empty()) {
    out += "<text x=\"" + num(opt.width / 2.0) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" font-family=\"sans-serif\">" +
           escape(opt.title) + "</text>\n";
  }
  out += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < g.directions.size(); ++i) {
    const double az = g.directions[i].azimuth(), el = g.directions[i].elevation();
    const double w = std::abs(el) == 90.0 ? 360.0 : azStep;
    const double x0 = std::abs(el) == 90.0 ? 0.0 : az - azStep / 2;
    const double e0 = std::min(90.0, el + elStep / 2), e1 = std::max(-90.0, el - elStep / 2);
    out += "<rect x=\"" + num(px(std::max(0.0, x0))) + "\" y=\"" + num(py(e0)) + "\" width=\"" +
           num(pw * w / 360.0) + "\" height=\"" + num(py(e1) - py(e0)) + "\" fill=\"" +
           colormap((g.values[i] - vmin) / (vmax - vmin)) + "\"/>\n";
  }
  out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) +
         "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int az = 0; az <= 360; az += 90) {
    out += "<text x=\"" + num(px(az)) + "\" y=\"" + num(top + ph + 16) +
           "\" text-anchor=\"middle\">" + std::to_string(az) + "</text>\n";
  }
  for (int el = -90; el <= 90; el += 45) {
    out += "<text x=\"" + num(left - 6) + "\" y=\"" + num(py(el) + 4) + "\" text-anchor=\"end\">" +
           std::to_string(el) + "</text>\n";
  }
  out += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(opt.height - 12.0) +
         "\" text-anchor=\"middle\" font-size=\"13\">" +
         escape(opt.xLabel.empty() ? "azimuth_deg" : opt.xLabel) + "</text>\n";
  out += "<text transform=\"translate(16," + num(top + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" +
         escape(opt.yLabel.empty() ? "elevation_deg" : opt.yLabel) + "</text>\n";
  for (int i = 0; i <= 10; ++i) {
    const double t = i / 10.0;
    out += "<rect x=\"" + num(left + pw + 20) + "\" y=\"" + num(top + (1 - t) * (ph - ph / 11)) +
           "\" width=\"16\" height=\"" + num(ph / 11) + "\" fill=\"" + colormap(t) + "\"/>\n";
  }
  out += "<text x=\"" + num(left + pw + 40) + "\" y=\"" + num(top + 10) + "\">" +
         tickLabel(std::round(vmax * 100) / 100) + "</text>\n";
  out += "<text x=\"" + num(left + pw + 40) + "\" y=\"" + num(top + ph) + "\">" +
         tickLabel(std::round(vmin * 100) / 100) + "</text>\n";
  out += "<text x=\"" + num(left + pw + 20) + "\" y=\"" + num(top + ph + 16) + "\">" +
         escape(quantity) + "</text>\n";
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace dirkit::plot
