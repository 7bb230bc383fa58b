#pragma once

// A representation written from scratch: an analytic cardioid that is
// continuous in direction and frequency. It shows the minimum a plugin needs:
// coordinates, the datatypes it serves and a read of pre-coerced coordinates.

#include <cmath>
#include <string>

#include "dirkit/directivity.hpp"

namespace samples {

class CardioidModel : public dirkit::Directivity {
 public:
  /// Main lobe toward `axis`; elevation limited to [elMin, elMax] and
  /// frequency to [fMin, fMax].
  CardioidModel(std::string info, dirkit::Direction axis, double elMin = -90.0,
                double elMax = 90.0, double fMin = 0.0, double fMax = 24000.0)
      : Directivity(std::move(info),
                    dirkit::CoordinateSet({dirkit::Direction(0.0, elMin), dirkit::Direction(0.0, elMax)},
                                          {fMin, fMax}, {}, dirkit::Continuity{true, true, false})),
        axis_(axis) {}

  dirkit::DataTypeSet supportedDataTypes() const override {
    return {dirkit::DataType::LinearMagnitude, dirkit::DataType::PowerSpectrum,
            dirkit::DataType::LogMagnitude};
  }

  /// Linear magnitude; the pattern narrows slowly with frequency.
  double magnitude(const dirkit::Direction& d, double f) const {
    const double c = std::cos(dirkit::greatCircleAngle(axis_, d) * dirkit::kDegToRad);
    const double sharpness = 1.0 + f / 10000.0;
    return std::pow(0.5 * (1.0 + c), sharpness) + 1e-3;
  }

 protected:
  dirkit::DataVolume read(const dirkit::CoordinateSet& at, dirkit::DataType type) const override {
    const auto& dirs = at.directions();
    const auto& freqs = at.frequencies();
    dirkit::Array3<double> out(dirs.size(), freqs.size(), at.distances().size());
    for (std::size_t r = 0; r < at.distances().size(); ++r)
      for (std::size_t f = 0; f < freqs.size(); ++f)
        for (std::size_t d = 0; d < dirs.size(); ++d) {
          const double m = magnitude(dirs[d], freqs[f]);
          switch (type) {
            case dirkit::DataType::LinearMagnitude: out(d, f, r) = m; break;
            case dirkit::DataType::PowerSpectrum: out(d, f, r) = m * m; break;
            default: out(d, f, r) = dirkit::linearToDb(m); break;
          }
        }
    return {type, std::move(out), at};
  }

 private:
  dirkit::Direction axis_;
};

}  // namespace samples
