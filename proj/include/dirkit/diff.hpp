#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "array3.hpp"
#include "coords.hpp"
#include "datatype.hpp"
#include "directivity.hpp"
#include "error.hpp"

namespace dirkit {

/// Aggregation applied to a selection of (difference, reference) pairs.
///
/// Real datatypes arrive as complex numbers with zero imaginary part. User
/// measures must be pure.
struct Measure {
  enum class Kind { SD, MSE, User };
  using Function = std::function<double(std::span<const Complex> differences,
                                        std::span<const Complex> references)>;

  Kind kind = Kind::SD;
  std::string name = "SD";
  Function user;

  static Measure sd() { return {Kind::SD, "SD", {}}; }
  static Measure mse() { return {Kind::MSE, "MSE", {}}; }
  static Measure custom(std::string name, Function fn) {
    return {Kind::User, std::move(name), std::move(fn)};
  }
};

/// Root mean square of dB differences.
inline double spectralDistortion(std::span<const Complex> differences) {
  if (differences.empty()) throw DomainError("SD: empty selection");
  double acc = 0.0;
  for (const Complex& d : differences) acc += d.real() * d.real();
  return std::sqrt(acc / static_cast<double>(differences.size()));
}

/// Difference energy over reference energy.
inline double normalizedMse(std::span<const Complex> differences,
                            std::span<const Complex> references) {
  if (differences.empty()) throw DomainError("MSE: empty selection");
  double num = 0.0, den = 0.0;
  for (const Complex& d : differences) num += std::norm(d);
  for (const Complex& r : references) den += std::norm(r);
  if (den == 0.0) throw DomainError("MSE: reference selection has zero energy");
  return num / den;
}

/// Coordinate agreement required between the two reads of a difference.
/// Applies to dimensions where both objects are discrete; a continuous
/// dimension that clamped a coordinate only raises a warning.
struct DiffTolerance {
  double directionDeg = 0.5;
  double binFraction = 0.5;  ///< of the reference's frequency bin spacing
  double distance = 1e-3;
};

/// Pointwise differences evaluand - reference, readable through the common
/// contract like any representation.
///
/// Both objects are addressed at the reference's actual coordinates for the
/// request; the datatype tag is appended to `info`.
class DirectivityDiff : public Directivity {
 public:
  DirectivityDiff(std::string info, const Directivity& reference, const Directivity& evaluand,
                  const CoordinateSet& at, DataType type, DiffTolerance tolerance = {})
      : DirectivityDiff(build(std::move(info), reference, evaluand, at, type, tolerance)) {}

  DataTypeSet supportedDataTypes() const override { return {type_}; }

  DataType datatype() const noexcept { return type_; }
  const DataVolume& differences() const noexcept { return diff_; }
  const DataVolume& referenceValues() const noexcept { return ref_; }

  /// Non-empty when coordinates of the two reads differed within tolerance.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  bool hasCoordinateWarning() const noexcept { return !warnings_.empty(); }

  double computeSD() const { return computeSD(coords()); }
  double computeSD(const CoordinateSet& over) const {
    requireMeasure(Measure::sd());
    const auto sel = select(coerce(coords(), over).coords);
    return spectralDistortion(sel.first);
  }

  double computeMSE() const { return computeMSE(coords()); }
  double computeMSE(const CoordinateSet& over) const {
    requireMeasure(Measure::mse());
    const auto sel = select(coerce(coords(), over).coords);
    return normalizedMse(sel.first, sel.second);
  }

  double aggregate(const Measure& m, const CoordinateSet& over) const {
    requireMeasure(m);
    const auto sel = select(coerce(coords(), over).coords);
    return apply(m, sel);
  }

  /// Error over all directions and distances, per stored frequency bin in
  /// [range.first, range.second].
  std::vector<std::pair<double, double>> errorVsFrequency(
      const Measure& m, std::optional<std::pair<double, double>> range = {}) const {
    requireMeasure(m);
    const auto bins = binsInRange(range);
    std::vector<std::pair<double, double>> out;
    out.reserve(bins.size());
    for (std::size_t f : bins) {
      Selection sel;
      for (std::size_t r = 0; r < coords().distances().size(); ++r)
        for (std::size_t d = 0; d < coords().directions().size(); ++d) push(sel, d, f, r);
      out.emplace_back(coords().frequencies()[f], apply(m, sel));
    }
    return out;
  }

  /// Error per horizontal-plane direction (|elevation| <= tolerance), over the
  /// bins in range and all distances, sorted by azimuth.
  std::vector<std::pair<double, double>> errorHorizontal(
      const Measure& m, std::optional<std::pair<double, double>> range = {},
      double elevationToleranceDeg = 1e-6) const {
    requireMeasure(m);
    const auto bins = binsInRange(range);
    const auto& dirs = coords().directions();
    std::vector<std::size_t> ring;
    for (std::size_t d = 0; d < dirs.size(); ++d) {
      if (std::abs(dirs[d].elevation()) <= elevationToleranceDeg) ring.push_back(d);
    }
    if (ring.empty()) throw DomainError("errorHorizontal: no datapoints on the horizontal plane");
    std::stable_sort(ring.begin(), ring.end(), [&](std::size_t a, std::size_t b) {
      return dirs[a].azimuth() < dirs[b].azimuth();
    });
    std::vector<std::pair<double, double>> out;
    out.reserve(ring.size());
    for (std::size_t d : ring) {
      Selection sel;
      for (std::size_t r = 0; r < coords().distances().size(); ++r)
        for (std::size_t f : bins) push(sel, d, f, r);
      out.emplace_back(dirs[d].azimuth(), apply(m, sel));
    }
    return out;
  }

 protected:
  DataVolume read(const CoordinateSet& coerced, DataType type) const override {
    const auto idx = indices(coerced);
    const std::size_t D = idx.dirs.size(), F = idx.freqs.size(), R = idx.dists.size();
    if (type == DataType::ComplexSpectrum) {
      Array3<Complex> out(D, F, R);
      for (std::size_t r = 0; r < R; ++r)
        for (std::size_t f = 0; f < F; ++f)
          for (std::size_t d = 0; d < D; ++d)
            out(d, f, r) = diff_.complex()(idx.dirs[d], idx.freqs[f], idx.dists[r]);
      return {std::move(out), coerced};
    }
    Array3<double> out(D, F, R);
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t f = 0; f < F; ++f)
        for (std::size_t d = 0; d < D; ++d)
          out(d, f, r) = diff_.real()(idx.dirs[d], idx.freqs[f], idx.dists[r]);
    return {type, std::move(out), coerced};
  }

 private:
  struct Parts {
    std::string info;
    CoordinateSet coords;
    DataType type;
    DataVolume diff;
    DataVolume ref;
    std::vector<std::string> warnings;
  };

  using Selection = std::pair<std::vector<Complex>, std::vector<Complex>>;

  struct Indices {
    std::vector<std::size_t> dirs, freqs, dists;
  };

  explicit DirectivityDiff(Parts p)
      : Directivity(std::move(p.info), std::move(p.coords)),
        type_(p.type),
        diff_(std::move(p.diff)),
        ref_(std::move(p.ref)),
        warnings_(std::move(p.warnings)) {}

  static double minSpacing(const CoordinateSet& cs) {
    if (cs.continuity().frequency) return 0.0;
    const auto& f = cs.frequencies();
    double best = 0.0;
    for (std::size_t i = 1; i < f.size(); ++i) {
      const double s = f[i] - f[i - 1];
      if (best == 0.0 || s < best) best = s;
    }
    return best;
  }

  static Parts build(std::string info, const Directivity& reference, const Directivity& evaluand,
                     const CoordinateSet& at, DataType type, const DiffTolerance& tol) {
    if (type != DataType::LogMagnitude && type != DataType::LinearMagnitude &&
        type != DataType::ComplexSpectrum) {
      throw UnsupportedDataType("diff: datatype '" + std::string(toString(type)) +
                                "' not allowed (use log, lin or complex)");
    }
    if (!reference.supports(type)) {
      throw UnsupportedDataType("diff: reference does not support datatype '" +
                                std::string(toString(type)) + "'");
    }
    if (!evaluand.supports(type)) {
      throw UnsupportedDataType("diff: evaluand does not support datatype '" +
                                std::string(toString(type)) + "'");
    }

    DataVolume ref = reference.getDataM(at, type);
    const CoordinateSet& ra = ref.actualCoords();
    const CoordinateSet& ec = evaluand.coords();
    const Continuity evCont = ec.continuity();
    const Continuity refCont = reference.coords().continuity();
    std::vector<std::string> warnings;

    // evaluand counterpart of every reference cell coordinate
    std::vector<Direction> evDirs;
    std::vector<std::size_t> dirMap;
    {
      std::map<Direction, std::size_t> seen;
      for (const Direction& d : ra.directions()) {
        const Direction e = coerce(ec, CoordinateSet({d}, {})).coords.directions().at(0);
        if (e != d) {
          const double angle = greatCircleAngle(d, e);
          if (!evCont.direction && !refCont.direction && angle > tol.directionDeg) {
            throw CoordinateMismatch("diff: direction (" + std::to_string(d.azimuth()) + ", " +
                                     std::to_string(d.elevation()) + ") read " +
                                     std::to_string(angle) + " deg away in the evaluand");
          }
          warnings.push_back("direction (" + std::to_string(d.azimuth()) + ", " +
                             std::to_string(d.elevation()) + ") read at (" +
                             std::to_string(e.azimuth()) + ", " + std::to_string(e.elevation()) +
                             ") in the evaluand");
        }
        auto [it, inserted] = seen.emplace(e, evDirs.size());
        if (inserted) evDirs.push_back(e);
        dirMap.push_back(it->second);
      }
    }

    double spacing = minSpacing(reference.coords());
    if (spacing == 0.0) spacing = minSpacing(ec);
    auto mapScalars = [&](const std::vector<double>& refVals, const std::vector<double>& evBase,
                          bool evContinuous, bool bothDiscrete, double limit, const char* dim,
                          std::vector<double>& evVals, std::vector<std::size_t>& map) {
      for (double v : refVals) {
        double e = v;
        if (evContinuous) e = std::clamp(v, evBase[0], evBase[1]);
        else if (!evBase.empty()) e = detail::nearestAscending(evBase, v);
        if (e != v) {
          if (bothDiscrete && std::abs(e - v) > limit) {
            throw CoordinateMismatch(std::string("diff: ") + dim + " " + std::to_string(v) +
                                     " read at " + std::to_string(e) + " in the evaluand");
          }
          warnings.push_back(std::string(dim) + " " + std::to_string(v) + " read at " +
                             std::to_string(e) + " in the evaluand");
        }
        if (evVals.empty() || evVals.back() != e) evVals.push_back(e);
        map.push_back(evVals.size() - 1);
      }
    };
    std::vector<double> evFreqs, evDists;
    std::vector<std::size_t> freqMap, distMap;
    mapScalars(ra.frequencies(), ec.frequencies(), evCont.frequency,
               !evCont.frequency && !refCont.frequency, tol.binFraction * spacing, "frequency",
               evFreqs, freqMap);
    mapScalars(ra.distances(), ec.distances(), evCont.distance,
               !evCont.distance && !refCont.distance, tol.distance, "distance", evDists, distMap);

    const DataVolume ev = evaluand.getDataM(CoordinateSet(evDirs, evFreqs, evDists), type);
    const std::size_t D = ra.directions().size(), F = ra.frequencies().size(),
                      R = ra.distances().size();

    std::optional<DataVolume> diff;
    if (type == DataType::ComplexSpectrum) {
      Array3<Complex> out(D, F, R);
      for (std::size_t r = 0; r < R; ++r)
        for (std::size_t f = 0; f < F; ++f)
          for (std::size_t d = 0; d < D; ++d)
            out(d, f, r) =
                ev.complex()(dirMap[d], freqMap[f], distMap[r]) - ref.complex()(d, f, r);
      diff.emplace(std::move(out), ra);
    } else {
      Array3<double> out(D, F, R);
      for (std::size_t r = 0; r < R; ++r)
        for (std::size_t f = 0; f < F; ++f)
          for (std::size_t d = 0; d < D; ++d)
            out(d, f, r) = ev.real()(dirMap[d], freqMap[f], distMap[r]) - ref.real()(d, f, r);
      diff.emplace(type, std::move(out), ra);
    }

    if (info.empty()) info = "diff of " + evaluand.info() + " vs " + reference.info();
    info += " (datatype: " + std::string(toString(type)) + ")";
    CoordinateSet coords = ra;
    return {std::move(info), std::move(coords), type, std::move(*diff), std::move(ref),
            std::move(warnings)};
  }

  void requireMeasure(const Measure& m) const {
    if (m.kind == Measure::Kind::SD && type_ != DataType::LogMagnitude) {
      throw UnsupportedDataType("SD requires log-magnitude differences, diff holds '" +
                                std::string(toString(type_)) + "'");
    }
    if (m.kind == Measure::Kind::MSE && type_ == DataType::LogMagnitude) {
      throw UnsupportedDataType("MSE requires lin or complex differences, diff holds 'log'");
    }
    if (m.kind == Measure::Kind::User && !m.user) {
      throw DomainError("user measure '" + m.name + "' has no function");
    }
  }

  static double apply(const Measure& m, const Selection& sel) {
    switch (m.kind) {
      case Measure::Kind::SD: return spectralDistortion(sel.first);
      case Measure::Kind::MSE: return normalizedMse(sel.first, sel.second);
      case Measure::Kind::User: return m.user(sel.first, sel.second);
    }
    return 0.0;
  }

  Indices indices(const CoordinateSet& coerced) const {
    const auto& all = coords();
    Indices idx;
    for (const Direction& d : coerced.directions()) idx.dirs.push_back(*findDirection(all.directions(), d));
    for (double f : coerced.frequencies()) idx.freqs.push_back(*findValue(all.frequencies(), f));
    for (double r : coerced.distances()) idx.dists.push_back(*findValue(all.distances(), r));
    return idx;
  }

  void push(Selection& sel, std::size_t d, std::size_t f, std::size_t r) const {
    sel.first.push_back(diff_.at(d, f, r));
    sel.second.push_back(ref_.at(d, f, r));
  }

  Selection select(const CoordinateSet& coerced) const {
    const auto idx = indices(coerced);
    Selection sel;
    for (std::size_t r : idx.dists)
      for (std::size_t f : idx.freqs)
        for (std::size_t d : idx.dirs) push(sel, d, f, r);
    return sel;
  }

  std::vector<std::size_t> binsInRange(std::optional<std::pair<double, double>> range) const {
    const auto& f = coords().frequencies();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!range || (f[i] >= range->first && f[i] <= range->second)) out.push_back(i);
    }
    if (out.empty()) throw DomainError("no frequency bins inside the requested range");
    return out;
  }

  DataType type_;
  DataVolume diff_;
  DataVolume ref_;
  std::vector<std::string> warnings_;
};

}  // namespace dirkit
