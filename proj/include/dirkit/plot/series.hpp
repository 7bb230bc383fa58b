#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "../datatype.hpp"
#include "../error.hpp"

namespace dirkit::plot {

enum class XAxis { FrequencyLog, AzimuthLinear, CoefficientCount, TimeLinear };
enum class YAxis { Db, Ratio, Linear };

inline std::string axisName(XAxis x) {
  switch (x) {
    case XAxis::FrequencyLog: return "frequency_Hz";
    case XAxis::AzimuthLinear: return "azimuth_deg";
    case XAxis::CoefficientCount: return "coefficients";
    case XAxis::TimeLinear: return "time_s";
  }
  return "x";
}

inline std::string unitSuffix(YAxis y) {
  switch (y) {
    case YAxis::Db: return "_dB";
    case YAxis::Ratio: return "_ratio";
    case YAxis::Linear: return "";
  }
  return "";
}

/// y-axis kind matching a magnitude datatype.
inline YAxis yAxisFor(DataType t) {
  return t == DataType::LogMagnitude ? YAxis::Db : YAxis::Linear;
}

/// One labelled curve. x strictly ascending, y finite.
class PlotSeries {
 public:
  PlotSeries(std::string label, XAxis x, YAxis y, std::string quantity,
             std::vector<std::pair<double, double>> points)
      : label_(std::move(label)), x_(x), y_(y), quantity_(std::move(quantity)),
        points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!std::isfinite(points_[i].first) || !std::isfinite(points_[i].second)) {
        throw DomainError("plot series '" + label_ + "': non-finite value at point " +
                          std::to_string(i));
      }
      if (i > 0 && !(points_[i - 1].first < points_[i].first)) {
        throw DomainError("plot series '" + label_ + "': x values must be strictly ascending");
      }
    }
  }

  PlotSeries(std::string label, XAxis x, YAxis y, std::string quantity,
             const std::vector<double>& xs, const std::vector<double>& ys)
      : PlotSeries(std::move(label), x, y, std::move(quantity), zip(xs, ys)) {}

  const std::string& label() const noexcept { return label_; }
  XAxis xAxis() const noexcept { return x_; }
  YAxis yAxis() const noexcept { return y_; }
  const std::string& quantity() const noexcept { return quantity_; }
  const std::vector<std::pair<double, double>>& points() const noexcept { return points_; }

  std::string yName() const { return quantity_ + unitSuffix(y_); }

 private:
  static std::vector<std::pair<double, double>> zip(const std::vector<double>& xs,
                                                    const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw DimensionError("plot series: x and y lengths differ");
    std::vector<std::pair<double, double>> out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out.emplace_back(xs[i], ys[i]);
    return out;
  }

  std::string label_;
  XAxis x_;
  YAxis y_;
  std::string quantity_;
  std::vector<std::pair<double, double>> points_;
};

}  // namespace dirkit::plot
