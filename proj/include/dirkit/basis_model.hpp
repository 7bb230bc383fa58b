#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "array3.hpp"
#include "coords.hpp"
#include "datatype.hpp"
#include "directivity.hpp"
#include "error.hpp"

namespace dirkit {

enum class BasisFamily {
  Fourier,  ///< 1, cos 2pi x, sin 2pi x, cos 4pi x, sin 4pi x, ...
  Cosine,   ///< cos(j pi x), j = 0, 1, ...
};

inline std::string_view toString(BasisFamily f) {
  return f == BasisFamily::Fourier ? "Fourier" : "Cosine";
}

inline BasisFamily parseBasisFamily(std::string_view s) {
  if (s == "Fourier") return BasisFamily::Fourier;
  if (s == "Cosine") return BasisFamily::Cosine;
  throw DomainError("unknown basis family '" + std::string(s) + "'");
}

/// First `count` basis functions of `family` at normalised position x in [0, 1).
inline std::vector<double> evalBasis(BasisFamily family, std::size_t count, double x) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("evalBasis: x must lie in [0, 1)");
  std::vector<double> b(count);
  constexpr double pi = std::numbers::pi;
  if (family == BasisFamily::Fourier) {
    for (std::size_t k = 0; k < count; ++k) {
      if (k == 0) {
        b[k] = 1.0;
        continue;
      }
      const double harmonic = static_cast<double>((k + 1) / 2);
      const double arg = 2.0 * pi * harmonic * x;
      b[k] = (k % 2 == 1) ? std::cos(arg) : std::sin(arg);
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) b[k] = std::cos(static_cast<double>(k) * pi * x);
  }
  return b;
}

/// Log-magnitude spectrum model: per direction and distance, the dB spectrum
/// is sum_k c_k b_k(x(f)), continuous in frequency between its limits.
///
/// x(f) interpolates linearly through the fit bins placed at x_j = j / N, so on
/// uniform bins it is the affine map x = (f - f_1) / (f_N - f_1) * (N - 1) / N.
/// Frequencies outside the fit bins clamp to the nearest end.
class BasisSpectrumModel : public Directivity {
 public:
  /// `coefficients` has shape (directions, order, distances).
  BasisSpectrumModel(std::string info, BasisFamily family, Array3<double> coefficients,
                     std::pair<double, double> frequencyLimits, std::vector<double> bins,
                     std::vector<Direction> directions, std::vector<double> distances = {})
      : Directivity(std::move(info), makeCoords(coefficients, frequencyLimits, bins,
                                                std::move(directions), std::move(distances))),
        family_(family),
        coefficients_(std::move(coefficients)),
        bins_(std::move(bins)) {}

  DataTypeSet supportedDataTypes() const override {
    return {DataType::LogMagnitude, DataType::LinearMagnitude, DataType::PowerSpectrum};
  }

  BasisFamily family() const noexcept { return family_; }
  std::size_t order() const noexcept { return coefficients_.bins(); }
  const Array3<double>& coefficients() const noexcept { return coefficients_; }
  const std::vector<double>& bins() const noexcept { return bins_; }
  std::pair<double, double> frequencyLimits() const { return coords().frequencyLimits(); }

  /// Normalised basis position of frequency f.
  double position(double f) const {
    const std::size_t n = bins_.size();
    const double scale = 1.0 / static_cast<double>(n);
    if (n == 1 || f <= bins_.front()) return 0.0;
    if (f >= bins_.back()) return static_cast<double>(n - 1) * scale;
    const auto it = std::upper_bound(bins_.begin(), bins_.end(), f);
    const auto j = static_cast<std::size_t>(it - bins_.begin()) - 1;
    const double t = (f - bins_[j]) / (bins_[j + 1] - bins_[j]);
    return (static_cast<double>(j) + t) * scale;
  }

  /// Model value in dB at one stored direction/distance index.
  double evaluateDb(std::size_t direction, std::size_t distance, double f) const {
    const auto b = evalBasis(family_, order(), position(f));
    double acc = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) acc += coefficients_(direction, k, distance) * b[k];
    return acc;
  }

 protected:
  DataVolume read(const CoordinateSet& coerced, DataType type) const override {
    const auto& all = coords();
    std::vector<std::size_t> di, ri;
    for (const Direction& d : coerced.directions()) di.push_back(*findDirection(all.directions(), d));
    for (double r : coerced.distances()) ri.push_back(*findValue(all.distances(), r));
    const auto& freqs = coerced.frequencies();

    Array3<double> out(di.size(), freqs.size(), ri.size());
    for (std::size_t f = 0; f < freqs.size(); ++f) {
      const auto b = evalBasis(family_, order(), position(freqs[f]));
      for (std::size_t r = 0; r < ri.size(); ++r) {
        for (std::size_t d = 0; d < di.size(); ++d) {
          double db = 0.0;
          for (std::size_t k = 0; k < b.size(); ++k) db += coefficients_(di[d], k, ri[r]) * b[k];
          switch (type) {
            case DataType::LinearMagnitude: out(d, f, r) = dbToLinear(db); break;
            case DataType::PowerSpectrum: {
              const double lin = dbToLinear(db);
              out(d, f, r) = lin * lin;
              break;
            }
            default: out(d, f, r) = db; break;
          }
        }
      }
    }
    return {type, std::move(out), coerced};
  }

 private:
  static CoordinateSet makeCoords(const Array3<double>& coefficients,
                                  std::pair<double, double> limits, const std::vector<double>& bins,
                                  std::vector<Direction> directions,
                                  std::vector<double> distances) {
    if (coefficients.bins() < 1) throw DimensionError("basis model: order must be >= 1");
    if (bins.empty()) throw DimensionError("basis model: empty bin list");
    if (coefficients.bins() > bins.size()) {
      throw DimensionError("basis model: order " + std::to_string(coefficients.bins()) +
                           " exceeds bin count " + std::to_string(bins.size()));
    }
    for (std::size_t i = 0; i < bins.size(); ++i) {
      if (!std::isfinite(bins[i]) || (i > 0 && !(bins[i - 1] < bins[i]))) {
        throw DomainError("basis model: bins must be finite and strictly ascending");
      }
    }
    if (distances.empty()) distances = {kDefaultDistance};
    if (coefficients.directions() != directions.size() ||
        coefficients.distances() != distances.size()) {
      throw DimensionError("basis model: coefficient shape does not match coordinates");
    }
    for (double c : coefficients.flat()) {
      if (!std::isfinite(c)) throw DomainError("basis model: non-finite coefficient");
    }
    return CoordinateSet(std::move(directions), {limits.first, limits.second},
                         std::move(distances), Continuity{false, true, false});
  }

  BasisFamily family_;
  Array3<double> coefficients_;
  std::vector<double> bins_;
};

/// Least-squares fit of the first `order` basis functions to the source's
/// log-magnitude spectrum at every stored direction and distance.
///
/// The fit uses the source's native bins inside the limits, DC excluded.
/// Default limits are [lowest non-DC bin, highest bin]. The design matrix is
/// shared by all directions and factorised once with column-pivoted QR; a
/// rank-deficient design is rejected.
inline BasisSpectrumModel fitBasisModel(std::string info, const Directivity& source,
                                        BasisFamily family, std::size_t order,
                                        std::optional<std::pair<double, double>> limits = {}) {
  if (!source.supports(DataType::LogMagnitude)) {
    throw UnsupportedDataType("fit: source does not provide log-magnitude data");
  }
  const CoordinateSet& sc = source.coords();
  if (!sc.isDiscrete()) throw FitError("fit: source coordinates must be discrete");
  if (order < 1) throw FitError("fit: order must be >= 1");

  std::vector<double> nonDc;
  for (double f : sc.frequencies()) {
    if (f > 0.0) nonDc.push_back(f);
  }
  if (nonDc.empty()) throw FitError("fit: source has no non-DC bins");
  const auto lim = limits.value_or(std::pair{nonDc.front(), nonDc.back()});
  if (!(lim.first <= lim.second) || lim.first < 0.0) {
    throw FitError("fit: frequency limits must satisfy 0 <= fmin <= fmax");
  }
  std::vector<double> bins;
  for (double f : nonDc) {
    if (f >= lim.first && f <= lim.second) bins.push_back(f);
  }
  const std::size_t n = bins.size();
  if (order > n) {
    throw FitError("fit: order " + std::to_string(order) + " exceeds the " + std::to_string(n) +
                   " source bins inside the limits");
  }

  const DataVolume y = source.getDataM(CoordinateSet(sc.directions(), bins, sc.distances()),
                                       DataType::LogMagnitude);
  const std::size_t D = y.directions(), R = y.distances();

  Eigen::MatrixXd design(n, order);
  for (std::size_t j = 0; j < n; ++j) {
    const auto b = evalBasis(family, order, static_cast<double>(j) / static_cast<double>(n));
    for (std::size_t k = 0; k < order; ++k) design(j, k) = b[k];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (static_cast<std::size_t>(qr.rank()) < order) {
    throw FitError("fit: design matrix is rank deficient (rank " + std::to_string(qr.rank()) +
                   " < order " + std::to_string(order) + ")");
  }

  Eigen::MatrixXd rhs(n, D * R);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t d = 0; d < D; ++d)
      for (std::size_t j = 0; j < n; ++j) rhs(j, d + D * r) = y.real()(d, j, r);
  const Eigen::MatrixXd c = qr.solve(rhs);

  Array3<double> coefficients(D, order, R);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t d = 0; d < D; ++d)
      for (std::size_t k = 0; k < order; ++k) coefficients(d, k, r) = c(k, d + D * r);

  return BasisSpectrumModel(std::move(info), family, std::move(coefficients), lim,
                            std::move(bins), sc.directions(), sc.distances());
}

}  // namespace dirkit
