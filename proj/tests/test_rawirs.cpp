#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "conformance.hpp"
#include "dirkit/raw_irs.hpp"
#include "oracles.hpp"

using namespace dirkit;

namespace {

RawIRs randomIrs(std::mt19937_64& rng, std::size_t D, std::size_t L, std::size_t R, double fs) {
  std::normal_distribution<double> n(0.0, 1.0);
  Array3<double> irs(D, L, R);
  for (double& v : irs.flat()) v = n(rng);
  std::vector<Direction> dirs;
  for (std::size_t d = 0; d < D; ++d) dirs.emplace_back(360.0 * d / D, d % 2 ? 20.0 : -10.0);
  std::vector<double> dists;
  for (std::size_t r = 0; r < R; ++r) dists.push_back(0.5 + r);
  return RawIRs("random", std::move(irs), fs, dirs, dists);
}

std::vector<double> column(const RawIRs& raw, std::size_t d, std::size_t r) {
  std::vector<double> h(raw.length());
  for (std::size_t n = 0; n < h.size(); ++n) h[n] = raw.irs()(d, n, r);
  return h;
}

}  // namespace

TEST(RawIRs, BinFrequencies) {
  EXPECT_EQ(RawIRs::binFrequencies(8, 8000), (std::vector<double>{0, 1000, 2000, 3000, 4000}));
  EXPECT_EQ(RawIRs::binFrequencies(5, 5000).size(), 3u);
  EXPECT_EQ(RawIRs::binFrequencies(5, 5000).back(), 2000.0);
}

TEST(RawIRs, ConstructionErrors) {
  EXPECT_THROW(RawIRs("x", Array3<double>(1, 4, 1), 0.0, {Direction(0, 0)}), DomainError);
  EXPECT_THROW(RawIRs("x", Array3<double>(1, 1, 1), 48000, {Direction(0, 0)}), DimensionError);
  EXPECT_THROW(RawIRs("x", Array3<double>(2, 4, 1), 48000, {Direction(0, 0)}), DimensionError);
  EXPECT_THROW(RawIRs("x", Array3<double>(1, 4, 2), 48000, {Direction(0, 0)}, {1.0}),
               DimensionError);
  Array3<double> bad(1, 4, 1);
  bad(0, 2, 0) = NAN;
  EXPECT_THROW(RawIRs("x", bad, 48000, {Direction(0, 0)}), DomainError);
}

TEST(RawIRs, TwoTapClosedForm) {
  const std::size_t L = 8;
  Array3<double> irs(1, L, 1);
  irs(0, 0, 0) = 1.0;
  irs(0, 1, 0) = -1.0;
  const RawIRs raw("two tap", irs, 8000, {Direction(0, 0)});
  const auto v = raw.getDataV(raw.coords(), DataType::LinearMagnitude);
  ASSERT_EQ(v.values.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_NEAR(v.values[k], 2.0 * std::abs(std::sin(oracle::kPi * k / L)), 1e-14);
  }
  EXPECT_EQ(v.values[0], 0.0);
  const auto logv = raw.getDataV(raw.coords(), DataType::LogMagnitude);
  EXPECT_EQ(logv.values[0], kLogFloorDb);
}

TEST(RawIRs, LowpassTapMagnitude) {
  const std::size_t L = 256;
  const double g = 0.8, a = 0.5;
  Array3<double> irs(1, L, 1);
  irs(0, 0, 0) = g;
  irs(0, 1, 0) = g * a;
  const RawIRs raw("lowpass", irs, 48000, {Direction(0, 0)});
  const auto v = raw.getDataV(raw.coords(), DataType::LinearMagnitude);
  for (std::size_t k = 0; k <= L / 2; ++k) {
    const double expected = g * std::abs(1.0 + a * std::polar(1.0, -2 * oracle::kPi * k / L));
    EXPECT_NEAR(v.values[k], expected, 1e-12);
  }
}

TEST(RawIRs, ComplexMatchesDirectDftAndFft) {
  std::mt19937_64 rng(5);
  const RawIRs raw = randomIrs(rng, 4, 64, 2, 44100);
  const auto v = raw.getDataM(raw.coords(), DataType::ComplexSpectrum);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t d = 0; d < 4; ++d) {
      const auto h = column(raw, d, r);
      const auto direct = oracle::dft(h);
      const auto fast = oracle::fft(std::vector<std::complex<double>>(h.begin(), h.end()));
      for (std::size_t k = 0; k <= 32; ++k) {
        const Complex got = v.complex()(d, k, r);
        EXPECT_LE(std::abs(got - direct[k]), 1e-11 * (1 + std::abs(direct[k])));
        EXPECT_LE(std::abs(got - fast[k]), 1e-11 * (1 + std::abs(fast[k])));
      }
    }
}

TEST(RawIRs, OddLengthMatchesDft) {
  std::mt19937_64 rng(6);
  const RawIRs raw = randomIrs(rng, 1, 45, 1, 1000);
  ASSERT_EQ(raw.coords().frequencies().size(), 23u);
  const auto v = raw.getDataM(raw.coords(), DataType::ComplexSpectrum);
  const auto direct = oracle::dft(column(raw, 0, 0));
  for (std::size_t k = 0; k < 23; ++k) EXPECT_LE(std::abs(v.complex()(0, k, 0) - direct[k]), 1e-11);
}

TEST(RawIRs, DatatypesAreConsistentAndParsevalHolds) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const RawIRs raw = randomIrs(rng, 1, 64, 1, 48000);
    const auto lin = raw.getDataV(raw.coords(), DataType::LinearMagnitude).values;
    const auto pow = raw.getDataV(raw.coords(), DataType::PowerSpectrum).values;
    const auto db = raw.getDataV(raw.coords(), DataType::LogMagnitude).values;
    for (std::size_t k = 0; k < lin.size(); ++k) {
      EXPECT_LE(std::abs(pow[k] - lin[k] * lin[k]), 1e-9 * lin[k] * lin[k]);
      EXPECT_NEAR(20 * std::log10(lin[k]), db[k], 1e-9);
    }
    // one-sided sum for even L: DC and Nyquist once, the rest twice
    double spectral = pow.front() + pow.back();
    for (std::size_t k = 1; k + 1 < pow.size(); ++k) spectral += 2 * pow[k];
    double energy = 0;
    for (double h : column(raw, 0, 0)) energy += h * h;
    EXPECT_NEAR(spectral / 64.0, energy, 1e-9 * energy);
  }
}

TEST(RawIRs, IrReadReportsSampleTimes) {
  std::mt19937_64 rng(8);
  const RawIRs raw = randomIrs(rng, 3, 16, 1, 1000);
  const auto v = raw.getDataM(CoordinateSet({Direction(121, 19)}, {5000}), DataType::ImpulseResponses);
  const auto& times = v.actualCoords().frequencies();
  ASSERT_EQ(times.size(), 16u);
  EXPECT_EQ(times[3], 0.003);
  EXPECT_EQ(v.actualCoords().directions().at(0), Direction(120, 20));
  EXPECT_EQ(v.real()(0, 7, 0), raw.irs()(1, 7, 0));
}

TEST(RawIRs, CoercesFrequenciesToBins) {
  std::mt19937_64 rng(9);
  const RawIRs raw = randomIrs(rng, 2, 8, 1, 8000);
  const auto v = raw.getDataM(CoordinateSet({Direction(0, 0)}, {900, 1400, 9999}),
                              DataType::LinearMagnitude);
  EXPECT_EQ(v.actualCoords().frequencies(), (std::vector<double>{1000, 4000}));
}

TEST(RawIRs, Conformance) {
  std::mt19937_64 rng(10);
  const RawIRs raw = randomIrs(rng, 6, 32, 2, 16000);
  std::vector<CoordinateSet> reqs{raw.coords()};
  for (int i = 0; i < 4; ++i) reqs.push_back(conformance::randomRequest(rng, 5, 6, 9000, {0.4, 1.6, 9}));
  const auto failures = conformance::runAll(raw, reqs, rng);
  EXPECT_TRUE(failures.empty()) << failures.front();
}
