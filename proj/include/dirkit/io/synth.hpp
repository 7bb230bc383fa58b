#pragma once

// Synthetic impulse-response sets with closed-form spectra.
//
// Gain per direction is g = g0 + g1 cos(delta), delta being the great-circle
// angle from the left-ear direction (90, 0). "flat" responses are g * delta[n]
// and have a constant log-magnitude of 20 log10 g; "lowpass" responses are
// (g, g a, 0, ...) with |H[k]| = g |1 + a exp(-i 2 pi k / L)|.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "../coords.hpp"
#include "../raw_irs.hpp"

namespace dirkit::io {

enum class SynthMode { Flat, Lowpass };

struct SynthSpec {
  SynthMode mode = SynthMode::Flat;
  double azimuthStep = 5.0;
  double elevationStep = 10.0;
  double elevationMin = -40.0;
  double elevationMax = 90.0;
  std::size_t length = 256;
  double sampleRate = 48000.0;
  double g0 = 0.6;
  double g1 = 0.4;
  double a = 0.5;
};

inline SynthMode parseSynthMode(std::string_view s) {
  if (s == "flat") return SynthMode::Flat;
  if (s == "lowpass") return SynthMode::Lowpass;
  throw DomainError("unknown synth mode '" + std::string(s) + "'");
}

/// Elevation-major equiangular grid; elevations lo, lo + step, ... <= hi and
/// azimuths 0, step, ... < 360. A pole is a single azimuth-0 point.
inline std::vector<Direction> synthGrid(const SynthSpec& s) {
  if (!(s.azimuthStep > 0.0) || !(s.azimuthStep <= 360.0)) {
    throw DomainError("synth: azimuth step must lie in (0, 360]");
  }
  if (!(s.elevationMin >= -90.0 && s.elevationMin <= s.elevationMax && s.elevationMax <= 90.0)) {
    throw DomainError("synth: elevation limits must satisfy -90 <= min <= max <= 90");
  }
  if (s.elevationMin < s.elevationMax && !(s.elevationStep > 0.0)) {
    throw DomainError("synth: elevation step must be positive");
  }
  std::vector<Direction> dirs;
  const auto nAz = static_cast<std::size_t>(std::ceil(360.0 / s.azimuthStep - 1e-9));
  const std::size_t nEl =
      s.elevationMin == s.elevationMax
          ? 1
          : static_cast<std::size_t>(
                std::floor((s.elevationMax - s.elevationMin) / s.elevationStep + 1e-9)) + 1;
  for (std::size_t e = 0; e < nEl; ++e) {
    const double el = s.elevationMin + static_cast<double>(e) * s.elevationStep;
    if (std::abs(el) == 90.0) {
      dirs.emplace_back(0.0, el);
      continue;
    }
    for (std::size_t i = 0; i < nAz; ++i) dirs.emplace_back(static_cast<double>(i) * s.azimuthStep, el);
  }
  return dirs;
}

inline double synthGain(const SynthSpec& s, const Direction& d) {
  return s.g0 + s.g1 * std::cos(greatCircleAngle(Direction(90.0, 0.0), d) * kDegToRad);
}

inline RawIRs synthTestSet(const SynthSpec& s, std::string info = {}) {
  if (!(s.g0 > s.g1) || !(s.g1 >= 0.0)) throw DomainError("synth: gains must satisfy g0 > g1 >= 0");
  if (s.length < 2) throw DomainError("synth: length must be at least 2");
  if (!(s.sampleRate > 0.0)) throw DomainError("synth: sample rate must be positive");
  if (s.mode == SynthMode::Lowpass && !(s.a > 0.0 && s.a < 1.0)) {
    throw DomainError("synth: lowpass parameter must lie in (0, 1)");
  }
  auto dirs = synthGrid(s);
  Array3<double> irs(dirs.size(), s.length, 1);
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    const double g = synthGain(s, dirs[d]);
    irs(d, 0, 0) = g;
    if (s.mode == SynthMode::Lowpass) irs(d, 1, 0) = g * s.a;
  }
  if (info.empty()) {
    info = std::string("synthetic ") + (s.mode == SynthMode::Flat ? "flat" : "lowpass") +
           " set, " + std::to_string(dirs.size()) + " directions, L=" + std::to_string(s.length);
  }
  return RawIRs(std::move(info), std::move(irs), s.sampleRate, std::move(dirs));
}

}  // namespace dirkit::io
