#pragma once

// Coordinate model shared by every representation.
//
// Convention: azimuth 0 deg is the front and increases anti-clockwise seen
// from above (90 = left, 180 = back, 270 = right); elevation runs from -90
// (nadir) to +90 (zenith). Angles are degrees, frequencies hertz, distances
// metres. The Cartesian frame used by the converters has x toward (0, 0),
// y toward (90, 0) and z toward the zenith.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "array3.hpp"
#include "error.hpp"

namespace dirkit {

inline constexpr double kDegToRad = std::numbers::pi / 180.0;
inline constexpr double kRadToDeg = 180.0 / std::numbers::pi;
inline constexpr double kDefaultDistance = 1.0;

/// Maps any finite angle into [0, 360).
inline double wrapAzimuth(double degrees) {
  double a = std::fmod(degrees, 360.0);
  if (a < 0.0) a += 360.0;
  // -tiny + 360 rounds to exactly 360
  if (a >= 360.0) a = 0.0;
  return a == 0.0 ? 0.0 : a;  // folds -0.0
}

class Direction {
 public:
  Direction() = default;
  Direction(double azimuth, double elevation) {
    if (!std::isfinite(azimuth) || !std::isfinite(elevation)) {
      throw DomainError("direction: non-finite angle");
    }
    if (elevation < -90.0 || elevation > 90.0) {
      throw DomainError("direction: elevation " + std::to_string(elevation) +
                        " outside [-90, 90]");
    }
    azimuth_ = wrapAzimuth(azimuth);
    elevation_ = elevation == 0.0 ? 0.0 : elevation;
  }

  double azimuth() const noexcept { return azimuth_; }
  double elevation() const noexcept { return elevation_; }

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction& a, const Direction& b) {
    if (auto c = a.elevation_ <=> b.elevation_; c != 0) return c;
    return a.azimuth_ <=> b.azimuth_;
  }

 private:
  double azimuth_ = 0.0;
  double elevation_ = 0.0;
};

using Vec3 = std::array<double, 3>;

inline Vec3 toCartesian(double azimuthDeg, double elevationDeg) {
  const double az = azimuthDeg * kDegToRad;
  const double el = elevationDeg * kDegToRad;
  return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
}

inline Vec3 toCartesian(const Direction& d) { return toCartesian(d.azimuth(), d.elevation()); }

/// Horizontal components below this norm are treated as lying on the pole;
/// the azimuth there is set to 0.
inline constexpr double kPoleTolerance = 1e-14;

/// Unit-sphere Cartesian to (azimuth in [0,360), elevation). The input need
/// not be normalised.
inline std::pair<double, double> fromCartesian(const Vec3& v) {
  const double horizontal = std::hypot(v[0], v[1]);
  const double norm = std::hypot(horizontal, v[2]);
  if (horizontal <= kPoleTolerance * norm) {
    return {0.0, v[2] >= 0.0 ? 90.0 : -90.0};
  }
  const double az = wrapAzimuth(std::atan2(v[1], v[0]) * kRadToDeg);
  const double el = std::atan2(v[2], horizontal) * kRadToDeg;
  return {az, std::clamp(el, -90.0, 90.0)};
}

/// Central angle between two directions in degrees, [0, 180].
inline double greatCircleAngle(const Vec3& u, const Vec3& v) {
  const Vec3 c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  const double cross = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return std::atan2(cross, dot) * kRadToDeg;
}

inline double greatCircleAngle(const Direction& a, const Direction& b) {
  if (a == b) return 0.0;
  return greatCircleAngle(toCartesian(a), toCartesian(b));
}

struct InterauralPolar {
  double polar = 0.0;    ///< [0, 360); 0 front, 90 above, 180 back
  double lateral = 0.0;  ///< [-90, 90]; -90 left ear, +90 right ear
};

/// Vertical-polar to interaural-polar: rotate (x, y, z) -> (x, z, -y) and read
/// the rotated vector back as (polar, lateral). Polar is 0 at |lateral| = 90.
inline InterauralPolar sph2iap(const Direction& d) {
  const Vec3 p = toCartesian(d);
  const Vec3 rotated{p[0], p[2], -p[1]};
  const auto [polar, lateral] = fromCartesian(rotated);
  return {polar, lateral};
}

/// Interaural-polar to vertical-polar: the inverse rotation (x, y, z) -> (x, -z, y).
inline Direction iap2sph(double polar, double lateral) {
  if (!std::isfinite(polar) || !(lateral >= -90.0 && lateral <= 90.0)) {
    throw DomainError("iap2sph: lateral angle must lie in [-90, 90]");
  }
  const Vec3 p = toCartesian(polar, lateral);
  const Vec3 rotated{p[0], -p[2], p[1]};
  const auto [az, el] = fromCartesian(rotated);
  return Direction(az, el);
}

inline Direction iap2sph(const InterauralPolar& ip) { return iap2sph(ip.polar, ip.lateral); }

/// Which dimensions of a CoordinateSet are continuous ranges.
struct Continuity {
  bool direction = false;
  bool frequency = false;
  bool distance = false;

  bool none() const noexcept { return !direction && !frequency && !distance; }
  friend bool operator==(const Continuity&, const Continuity&) = default;
};

/// Addresses a block of directivity data.
///
/// A discrete dimension lists its values; a continuous one stores exactly its
/// lower and upper limit. For continuous directions the two entries carry
/// elevation limits in their elevation fields and azimuth is unrestricted.
class CoordinateSet {
 public:
  CoordinateSet() : distances_{kDefaultDistance} {}

  CoordinateSet(std::vector<Direction> directions, std::vector<double> frequencies,
                std::vector<double> distances = {}, Continuity continuity = {})
      : directions_(std::move(directions)),
        frequencies_(std::move(frequencies)),
        distances_(std::move(distances)),
        continuity_(continuity) {
    if (distances_.empty()) {
      distances_ = {kDefaultDistance};
      continuity_.distance = false;
    }
    validate();
  }

  const std::vector<Direction>& directions() const noexcept { return directions_; }
  const std::vector<double>& frequencies() const noexcept { return frequencies_; }
  const std::vector<double>& distances() const noexcept { return distances_; }
  const Continuity& continuity() const noexcept { return continuity_; }

  bool isDiscrete() const noexcept { return continuity_.none(); }

  std::pair<double, double> elevationLimits() const {
    requireContinuous(continuity_.direction, "direction");
    return {directions_[0].elevation(), directions_[1].elevation()};
  }
  std::pair<double, double> frequencyLimits() const {
    requireContinuous(continuity_.frequency, "frequency");
    return {frequencies_[0], frequencies_[1]};
  }
  std::pair<double, double> distanceLimits() const {
    requireContinuous(continuity_.distance, "distance");
    return {distances_[0], distances_[1]};
  }

  friend bool operator==(const CoordinateSet&, const CoordinateSet&) = default;

 private:
  static void requireContinuous(bool flag, const char* dim) {
    if (!flag) throw DimensionError(std::string("coordinates: ") + dim + " dimension is discrete");
  }

  static void checkLimits(const std::vector<double>& v, const char* dim) {
    if (v.size() != 2) {
      throw DimensionError(std::string("coordinates: continuous ") + dim +
                           " needs exactly 2 limits, got " + std::to_string(v.size()));
    }
    if (!(v[0] <= v[1])) {
      throw DomainError(std::string("coordinates: ") + dim + " limits not ordered");
    }
  }

  static void checkAscending(const std::vector<double>& v, const char* dim) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!(v[i - 1] < v[i])) {
        throw DomainError(std::string("coordinates: ") + dim +
                          " values must be strictly ascending (index " + std::to_string(i) + ")");
      }
    }
  }

  void validate() const {
    for (double f : frequencies_) {
      if (!std::isfinite(f) || f < 0.0) throw DomainError("coordinates: frequency must be >= 0");
    }
    for (double r : distances_) {
      if (!std::isfinite(r) || r <= 0.0) throw DomainError("coordinates: distance must be > 0");
    }

    if (continuity_.direction) {
      if (directions_.size() != 2) {
        throw DimensionError("coordinates: continuous direction needs exactly 2 limits, got " +
                             std::to_string(directions_.size()));
      }
      if (!(directions_[0].elevation() <= directions_[1].elevation())) {
        throw DomainError("coordinates: elevation limits not ordered");
      }
    } else {
      std::vector<Direction> sorted = directions_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("coordinates: duplicate direction");
      }
    }

    if (continuity_.frequency) checkLimits(frequencies_, "frequency");
    else checkAscending(frequencies_, "frequency");

    if (continuity_.distance) checkLimits(distances_, "distance");
    else checkAscending(distances_, "distance");
  }

  std::vector<Direction> directions_;
  std::vector<double> frequencies_;
  std::vector<double> distances_;
  Continuity continuity_;
};

namespace detail {

// Nearest value of an ascending list; ties go to the lower index.
inline double nearestAscending(const std::vector<double>& base, double value) {
  auto it = std::lower_bound(base.begin(), base.end(), value);
  if (it == base.begin()) return *it;
  if (it == base.end()) return base.back();
  const double above = *it;
  const double below = *(it - 1);
  return (value - below <= above - value) ? below : above;
}

inline std::vector<double> coerceScalars(const std::vector<double>& base, bool baseContinuous,
                                         const std::vector<double>& requested,
                                         bool requestedContinuous, bool& changed) {
  std::vector<double> out;
  out.reserve(requested.size());
  for (double v : requested) {
    double c = v;
    if (baseContinuous) c = std::clamp(v, base[0], base[1]);
    else if (!base.empty()) c = nearestAscending(base, v);
    if (c != v) changed = true;
    // coercion is monotone, so duplicates are always adjacent
    if (!requestedContinuous && !out.empty() && out.back() == c) continue;
    out.push_back(c);
  }
  return out;
}

inline std::size_t nearestDirectionIndex(const std::vector<Direction>& base,
                                         const std::vector<Vec3>& baseUnit, const Direction& d) {
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] == d) return i;
  }
  const Vec3 u = toCartesian(d);
  std::size_t best = 0;
  double bestAngle = greatCircleAngle(baseUnit[0], u);
  for (std::size_t i = 1; i < base.size(); ++i) {
    const double a = greatCircleAngle(baseUnit[i], u);
    if (a < bestAngle) {
      bestAngle = a;
      best = i;
    }
  }
  return best;
}

}  // namespace detail

struct CoercionResult {
  CoordinateSet coords;
  bool changed = false;  ///< true when any requested value was replaced
};

/// Snaps `requested` onto what `base` can serve.
///
/// Discrete base dimensions replace each value by the nearest stored one
/// (great-circle angle for directions, absolute difference otherwise, ties
/// to the lowest index). Continuous base dimensions clamp into the limits.
/// The result keeps `requested`'s continuity flags; values that collapse onto
/// the same stored point in a discrete dimension are emitted once.
inline CoercionResult coerce(const CoordinateSet& base, const CoordinateSet& requested) {
  bool changed = false;
  const Continuity& bc = base.continuity();
  const Continuity& rc = requested.continuity();

  std::vector<Direction> dirs;
  dirs.reserve(requested.directions().size());
  if (bc.direction) {
    const auto [lo, hi] = base.elevationLimits();
    for (const Direction& d : requested.directions()) {
      const double el = std::clamp(d.elevation(), lo, hi);
      if (el != d.elevation()) changed = true;
      dirs.emplace_back(d.azimuth(), el);
    }
  } else if (!base.directions().empty()) {
    const auto& bd = base.directions();
    std::vector<Vec3> unit;
    unit.reserve(bd.size());
    for (const Direction& d : bd) unit.push_back(toCartesian(d));
    std::vector<bool> used(bd.size(), false);
    for (const Direction& d : requested.directions()) {
      const std::size_t i = detail::nearestDirectionIndex(bd, unit, d);
      if (bd[i] != d) changed = true;
      if (!rc.direction) {
        if (used[i]) continue;
        used[i] = true;
      }
      dirs.push_back(bd[i]);
    }
  } else {
    dirs = requested.directions();
  }

  auto freqs = detail::coerceScalars(base.frequencies(), bc.frequency, requested.frequencies(),
                                     rc.frequency, changed);
  auto dists = detail::coerceScalars(base.distances(), bc.distance, requested.distances(),
                                     rc.distance, changed);

  return {CoordinateSet(std::move(dirs), std::move(freqs), std::move(dists), rc), changed};
}

/// Per-cell coordinate grids, shape-compatible with a DataVolume read there.
struct CoordinateGrids {
  Array3<Direction> direction;
  Array3<double> frequency;
  Array3<double> distance;
};

inline CoordinateGrids expandGrid(const CoordinateSet& cs) {
  if (!cs.isDiscrete()) {
    throw DimensionError("expandGrid: coordinate set has a continuous dimension");
  }
  const auto& dirs = cs.directions();
  const auto& freqs = cs.frequencies();
  const auto& dists = cs.distances();
  const std::size_t D = dirs.size(), F = freqs.size(), R = dists.size();
  CoordinateGrids g{Array3<Direction>(D, F, R), Array3<double>(D, F, R), Array3<double>(D, F, R)};
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t f = 0; f < F; ++f) {
      for (std::size_t d = 0; d < D; ++d) {
        g.direction(d, f, r) = dirs[d];
        g.frequency(d, f, r) = freqs[f];
        g.distance(d, f, r) = dists[r];
      }
    }
  }
  return g;
}

/// Position of `d` in a discrete direction list (exact duplet match).
inline std::optional<std::size_t> findDirection(const std::vector<Direction>& list,
                                                const Direction& d) {
  auto it = std::find(list.begin(), list.end(), d);
  if (it == list.end()) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

/// Position of `v` in an ascending list (exact match).
inline std::optional<std::size_t> findValue(const std::vector<double>& list, double v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace dirkit
