#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "array3.hpp"
#include "coords.hpp"
#include "datatype.hpp"
#include "error.hpp"

namespace dirkit {

/// Values read from a representation, together with the coordinates they
/// were actually read at. Shape is (directions, frequency bins or time
/// samples, distances) of `actualCoords`.
class DataVolume {
 public:
  DataVolume(DataType type, Array3<double> values, CoordinateSet actual)
      : type_(type), values_(std::move(values)), actual_(std::move(actual)) {
    if (type_ == DataType::ComplexSpectrum) {
      throw DomainError("DataVolume: complex spectrum needs complex values");
    }
    checkShape(std::get<Array3<double>>(values_));
  }

  DataVolume(Array3<Complex> values, CoordinateSet actual)
      : type_(DataType::ComplexSpectrum), values_(std::move(values)), actual_(std::move(actual)) {
    checkShape(std::get<Array3<Complex>>(values_));
  }

  DataType datatype() const noexcept { return type_; }
  bool isComplex() const noexcept { return type_ == DataType::ComplexSpectrum; }
  const CoordinateSet& actualCoords() const noexcept { return actual_; }

  const Array3<double>& real() const {
    if (isComplex()) throw UnsupportedDataType("DataVolume: values are complex");
    return std::get<Array3<double>>(values_);
  }
  const Array3<Complex>& complex() const {
    if (!isComplex()) throw UnsupportedDataType("DataVolume: values are real");
    return std::get<Array3<Complex>>(values_);
  }

  std::size_t directions() const noexcept { return actual_.directions().size(); }
  std::size_t bins() const noexcept { return actual_.frequencies().size(); }
  std::size_t distances() const noexcept { return actual_.distances().size(); }

  /// Element as complex regardless of the stored kind.
  Complex at(std::size_t d, std::size_t f, std::size_t r) const {
    if (isComplex()) return std::get<Array3<Complex>>(values_)(d, f, r);
    return std::get<Array3<double>>(values_)(d, f, r);
  }

 private:
  template <typename T>
  void checkShape(const Array3<T>& a) const {
    if (a.directions() != actual_.directions().size() ||
        a.bins() != actual_.frequencies().size() ||
        a.distances() != actual_.distances().size()) {
      throw DimensionError("DataVolume: value shape does not match actual coordinates");
    }
  }

  DataType type_;
  std::variant<Array3<double>, Array3<Complex>> values_;
  CoordinateSet actual_;
};

/// Flattened read. Direction index varies fastest, distance slowest.
struct DataVector {
  DataType datatype;
  std::vector<double> values;          // real datatypes
  std::vector<Complex> complexValues;  // ComplexSpectrum only
  CoordinateSet actualCoords;
};

struct SpectrumSeries {
  Direction direction;  ///< direction actually read
  double distance = kDefaultDistance;
  DataType datatype = DataType::LogMagnitude;
  std::vector<double> frequencies;
  std::vector<double> values;
};

struct BalloonGrid {
  double frequency = 0.0;  ///< frequency actually read
  double distance = kDefaultDistance;
  DataType datatype = DataType::LogMagnitude;
  std::vector<Direction> directions;
  std::vector<double> values;
};

inline constexpr std::size_t kContinuousSpectrumSamples = 512;
inline constexpr double kSpectrumFloorHz = 20.0;
inline constexpr double kBalloonStepDeg = 5.0;

/// Uniform read contract implemented by every directivity representation.
///
/// Implementations supply coordinates, the set of datatypes they serve and
/// `read`, which receives requests already coerced to `coords()`. Everything
/// else (validation, coercion, flattening, plot-data extraction) lives here so
/// that all representations behave identically at the boundary.
///
/// Representations are immutable after construction and reads are const, so
/// a single object may be read concurrently.
class Directivity {
 public:
  virtual ~Directivity() = default;

  const std::string& info() const noexcept { return info_; }
  const CoordinateSet& coords() const noexcept { return coords_; }

  virtual DataTypeSet supportedDataTypes() const = 0;

  bool supports(DataType t) const { return supportedDataTypes().contains(t); }

  DataVolume getDataM(const CoordinateSet& requested, DataType type) const {
    requireSupported(type);
    if (!requested.isDiscrete()) {
      throw DimensionError("getDataM: requested coordinates must be discrete");
    }
    return read(coerce(coords_, requested).coords, type);
  }

  DataVector getDataV(const CoordinateSet& requested, DataType type) const {
    DataVolume v = getDataM(requested, type);
    DataVector out{type, {}, {}, v.actualCoords()};
    if (v.isComplex()) {
      const auto flat = v.complex().flat();
      out.complexValues.assign(flat.begin(), flat.end());
    } else {
      const auto flat = v.real().flat();
      out.values.assign(flat.begin(), flat.end());
    }
    return out;
  }

  /// Magnitude spectrum at one direction and distance. Frequency-continuous
  /// representations are sampled at 512 log-spaced points between their limits.
  SpectrumSeries spectrumSeries(const Direction& direction, double distance, DataType type) const {
    requireMagnitude(type, "spectrumSeries");
    std::vector<double> freqs;
    if (coords_.continuity().frequency) {
      auto [lo, hi] = coords_.frequencyLimits();
      if (lo <= 0.0) lo = kSpectrumFloorHz;
      freqs = logSpaced(lo, std::max(lo, hi), kContinuousSpectrumSamples);
    } else {
      freqs = coords_.frequencies();
    }
    const DataVolume v = getDataM(CoordinateSet({direction}, freqs, {distance}), type);
    const CoordinateSet& a = v.actualCoords();
    SpectrumSeries s{a.directions().at(0), a.distances().at(0), type, a.frequencies(), {}};
    s.values.reserve(s.frequencies.size());
    for (std::size_t f = 0; f < s.frequencies.size(); ++f) s.values.push_back(v.real()(0, f, 0));
    return s;
  }

  /// Magnitude over all directions at one frequency and distance.
  /// Direction-continuous representations use an equiangular 5 deg grid
  /// restricted to their elevation limits.
  BalloonGrid balloonGrid(double frequency, double distance, DataType type) const {
    requireMagnitude(type, "balloonGrid");
    std::vector<Direction> dirs;
    if (coords_.continuity().direction) {
      const auto [lo, hi] = coords_.elevationLimits();
      dirs = equiangularGrid(lo, hi, kBalloonStepDeg);
    } else {
      dirs = coords_.directions();
    }
    const DataVolume v = getDataM(CoordinateSet(dirs, {frequency}, {distance}), type);
    const CoordinateSet& a = v.actualCoords();
    BalloonGrid g{a.frequencies().at(0), a.distances().at(0), type, a.directions(), {}};
    g.values.reserve(g.directions.size());
    for (std::size_t d = 0; d < g.directions.size(); ++d) g.values.push_back(v.real()(d, 0, 0));
    return g;
  }

  /// `n` points from lo to hi, geometrically spaced, endpoints exact.
  static std::vector<double> logSpaced(double lo, double hi, std::size_t n) {
    if (n == 0) return {};
    if (n == 1 || lo == hi) return {lo};
    std::vector<double> out(n);
    const double ratio = std::log(hi / lo);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
  }

  /// Elevation-major grid of multiples of `step` inside [lo, hi]; the poles
  /// carry a single azimuth-0 point. Falls back to a ring at `lo` when no
  /// multiple of `step` lies in range.
  static std::vector<Direction> equiangularGrid(double lo, double hi, double step) {
    std::vector<double> elevations;
    const auto first = static_cast<long>(std::ceil(lo / step));
    const auto last = static_cast<long>(std::floor(hi / step));
    for (long k = first; k <= last; ++k) elevations.push_back(static_cast<double>(k) * step);
    if (elevations.empty()) elevations.push_back(lo);
    std::vector<Direction> out;
    const auto nAz = static_cast<std::size_t>(std::lround(360.0 / step));
    for (double e : elevations) {
      if (std::abs(e) == 90.0) {
        out.emplace_back(0.0, e);
        continue;
      }
      for (std::size_t i = 0; i < nAz; ++i) out.emplace_back(static_cast<double>(i) * step, e);
    }
    return out;
  }

 protected:
  Directivity(std::string info, CoordinateSet coords)
      : info_(std::move(info)), coords_(std::move(coords)) {}
  Directivity(const Directivity&) = default;
  Directivity(Directivity&&) noexcept = default;
  Directivity& operator=(const Directivity&) = default;
  Directivity& operator=(Directivity&&) noexcept = default;

  /// Serves a request whose coordinates are already a fixed point of
  /// coercion against coords(), for a supported datatype.
  virtual DataVolume read(const CoordinateSet& coerced, DataType type) const = 0;

  void requireSupported(DataType type) const {
    if (!supports(type)) {
      throw UnsupportedDataType("datatype '" + std::string(toString(type)) + "' (" +
                                std::string(longName(type)) +
                                ") is not supported by this representation");
    }
  }

 private:
  void requireMagnitude(DataType type, const char* what) const {
    requireSupported(type);
    if (!isMagnitude(type)) {
      throw UnsupportedDataType(std::string(what) + ": datatype '" + std::string(toString(type)) +
                                "' is not a magnitude spectrum");
    }
  }

  std::string info_;
  CoordinateSet coords_;
};

}  // namespace dirkit
