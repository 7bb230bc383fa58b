#pragma once

// CSV emitters. Header row names axes and units; numbers use 17 significant
// digits so output is byte-stable and lossless.

#include <string>
#include <vector>

#include "../coords.hpp"
#include "../directivity.hpp"
#include "../io/text.hpp"
#include "series.hpp"

namespace dirkit::plot {

inline std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Long format: series,<x>,<y>. All series must share axes.
inline std::string seriesCsv(const std::vector<PlotSeries>& series) {
  if (series.empty()) throw DomainError("csv: no series to write");
  const PlotSeries& first = series.front();
  for (const auto& s : series) {
    if (s.xAxis() != first.xAxis() || s.yName() != first.yName()) {
      throw DomainError("csv: series do not share axes");
    }
  }
  std::string out = "series," + axisName(first.xAxis()) + "," + first.yName() + "\n";
  for (const auto& s : series) {
    const std::string label = csvField(s.label());
    for (const auto& [x, y] : s.points()) {
      out += label + "," + io::formatNumber(x) + "," + io::formatNumber(y) + "\n";
    }
  }
  return out;
}

inline std::string balloonCsv(const BalloonGrid& g, const std::string& quantity) {
  std::string out = "azimuth_deg,elevation_deg," + quantity + "\n";
  for (std::size_t i = 0; i < g.directions.size(); ++i) {
    out += io::formatNumber(g.directions[i].azimuth()) + "," +
           io::formatNumber(g.directions[i].elevation()) + "," + io::formatNumber(g.values[i]) + "\n";
  }
  return out;
}

}  // namespace dirkit::plot
