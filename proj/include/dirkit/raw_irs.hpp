#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "array3.hpp"
#include "coords.hpp"
#include "datatype.hpp"
#include "directivity.hpp"
#include "error.hpp"

namespace dirkit {

/// Unnormalised forward DFT of a real sequence at selected bins:
/// H[k] = sum_n h[n] exp(-i 2 pi k n / L).
///
/// Twiddles are indexed by (k n mod L) so every term uses an exactly reduced
/// phase.
class RealDft {
 public:
  explicit RealDft(std::size_t length) : length_(length), twiddle_(length) {
    for (std::size_t m = 0; m < length; ++m) {
      const double phase = -2.0 * std::numbers::pi * static_cast<double>(m) /
                           static_cast<double>(length);
      twiddle_[m] = {std::cos(phase), std::sin(phase)};
    }
  }

  std::size_t length() const noexcept { return length_; }

  template <typename Range>
  Complex bin(const Range& h, std::size_t k) const {
    Complex acc{0.0, 0.0};
    std::size_t m = 0;
    const std::size_t step = k % length_;
    for (std::size_t n = 0; n < length_; ++n) {
      acc += h[n] * twiddle_[m];
      m += step;
      if (m >= length_) m -= length_;
    }
    return acc;
  }

 private:
  std::size_t length_;
  std::vector<Complex> twiddle_;
};

/// Discrete impulse responses per direction and distance, the base
/// representation every model is compared against.
///
/// Frequencies are derived as k * fs / L for k = 0..floor(L/2). Spectral reads
/// use the plain DFT above, no window and no normalisation. ImpulseResponses
/// reads ignore the requested frequencies and return full-length responses;
/// the middle axis of the result then holds sample times k / fs in seconds.
class RawIRs : public Directivity {
 public:
  /// `irs` has shape (directions, samples, distances).
  RawIRs(std::string info, Array3<double> irs, double sampleRate,
         std::vector<Direction> directions, std::vector<double> distances = {})
      : Directivity(std::move(info),
                    makeCoords(irs, sampleRate, std::move(directions), std::move(distances))),
        irs_(std::move(irs)),
        sampleRate_(sampleRate) {}

  DataTypeSet supportedDataTypes() const override {
    return {DataType::ImpulseResponses, DataType::ComplexSpectrum, DataType::LinearMagnitude,
            DataType::PowerSpectrum, DataType::LogMagnitude};
  }

  const Array3<double>& irs() const noexcept { return irs_; }
  double sampleRate() const noexcept { return sampleRate_; }
  std::size_t length() const noexcept { return irs_.bins(); }

  static std::vector<double> binFrequencies(std::size_t length, double sampleRate) {
    std::vector<double> f(length / 2 + 1);
    for (std::size_t k = 0; k < f.size(); ++k) {
      f[k] = static_cast<double>(k) * sampleRate / static_cast<double>(length);
    }
    return f;
  }

 protected:
  DataVolume read(const CoordinateSet& coerced, DataType type) const override {
    const auto& all = coords();
    std::vector<std::size_t> di, ri;
    for (const Direction& d : coerced.directions()) di.push_back(*findDirection(all.directions(), d));
    for (double r : coerced.distances()) ri.push_back(*findValue(all.distances(), r));

    if (type == DataType::ImpulseResponses) {
      const std::size_t L = length();
      std::vector<double> times(L);
      for (std::size_t n = 0; n < L; ++n) times[n] = static_cast<double>(n) / sampleRate_;
      Array3<double> out(di.size(), L, ri.size());
      for (std::size_t r = 0; r < ri.size(); ++r)
        for (std::size_t n = 0; n < L; ++n)
          for (std::size_t d = 0; d < di.size(); ++d) out(d, n, r) = irs_(di[d], n, ri[r]);
      return {type, std::move(out),
              CoordinateSet(coerced.directions(), std::move(times), coerced.distances())};
    }

    std::vector<std::size_t> ki;
    for (double f : coerced.frequencies()) ki.push_back(*findValue(all.frequencies(), f));

    const Array3<Complex> spectrum = dft(di, ki, ri);
    if (type == DataType::ComplexSpectrum) return {spectrum, coerced};

    Array3<double> out(di.size(), ki.size(), ri.size());
    auto src = spectrum.flat();
    auto dst = out.flat();
    for (std::size_t i = 0; i < dst.size(); ++i) {
      const double mag = std::abs(src[i]);
      switch (type) {
        case DataType::LinearMagnitude: dst[i] = mag; break;
        case DataType::PowerSpectrum: dst[i] = mag * mag; break;
        default: dst[i] = linearToDb(mag); break;
      }
    }
    return {type, std::move(out), coerced};
  }

 private:
  static CoordinateSet makeCoords(const Array3<double>& irs, double sampleRate,
                                  std::vector<Direction> directions,
                                  std::vector<double> distances) {
    if (!(sampleRate > 0.0) || !std::isfinite(sampleRate)) {
      throw DomainError("RawIRs: sample rate must be positive");
    }
    if (irs.bins() < 2) throw DimensionError("RawIRs: impulse responses need at least 2 samples");
    if (distances.empty()) distances = {kDefaultDistance};
    if (irs.directions() != directions.size()) {
      throw DimensionError("RawIRs: " + std::to_string(irs.directions()) +
                           " impulse-response directions but " +
                           std::to_string(directions.size()) + " directions given");
    }
    if (irs.distances() != distances.size()) {
      throw DimensionError("RawIRs: " + std::to_string(irs.distances()) +
                           " impulse-response distances but " + std::to_string(distances.size()) +
                           " distances given");
    }
    for (double v : irs.flat()) {
      if (!std::isfinite(v)) throw DomainError("RawIRs: non-finite sample");
    }
    return CoordinateSet(std::move(directions), binFrequencies(irs.bins(), sampleRate),
                         std::move(distances));
  }

  Array3<Complex> dft(const std::vector<std::size_t>& di, const std::vector<std::size_t>& ki,
                      const std::vector<std::size_t>& ri) const {
    const std::size_t L = length();
    const RealDft transform(L);
    Array3<Complex> out(di.size(), ki.size(), ri.size());
    std::vector<double> h(L);
    for (std::size_t r = 0; r < ri.size(); ++r) {
      for (std::size_t d = 0; d < di.size(); ++d) {
        for (std::size_t n = 0; n < L; ++n) h[n] = irs_(di[d], n, ri[r]);
        for (std::size_t f = 0; f < ki.size(); ++f) out(d, f, r) = transform.bin(h, ki[f]);
      }
    }
    return out;
  }

  Array3<double> irs_;
  double sampleRate_;
};

}  // namespace dirkit
