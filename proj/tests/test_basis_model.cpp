#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "conformance.hpp"
#include "dirkit/basis_model.hpp"
#include "dirkit/io/synth.hpp"
#include "oracles.hpp"

using namespace dirkit;

namespace {

io::SynthSpec smallSpec(io::SynthMode mode, std::size_t L = 64) {
  io::SynthSpec s;
  s.mode = mode;
  s.azimuthStep = 45;
  s.elevationStep = 30;
  s.elevationMin = -30;
  s.elevationMax = 90;
  s.length = L;
  return s;
}

RawIRs noisy(std::mt19937_64& rng, std::size_t L) {
  std::normal_distribution<double> n(0, 1);
  Array3<double> irs(3, L, 1);
  for (double& v : irs.flat()) v = n(rng);
  return RawIRs("noise", irs, 48000, {Direction(0, 0), Direction(90, 10), Direction(200, -30)});
}

}  // namespace

TEST(Basis, FrozenFourierValues) {
  const auto b = evalBasis(BasisFamily::Fourier, 5, 0.25);
  const double expected[] = {1, 0, 1, -1, 0};
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(b[k], expected[k], 1e-15);
  EXPECT_THROW(evalBasis(BasisFamily::Fourier, 3, 1.0), DomainError);
  EXPECT_THROW(evalBasis(BasisFamily::Fourier, 3, -0.1), DomainError);
}

TEST(Basis, FourierMatchesIndependentRow) {
  for (double x : {0.0, 0.1, 0.37, 0.99}) {
    const auto b = evalBasis(BasisFamily::Fourier, 9, x);
    const auto o = oracle::fourierRow(9, x);
    for (int k = 0; k < 9; ++k) EXPECT_NEAR(b[k], o[k], 1e-14);
  }
}

TEST(Basis, CosineFamily) {
  const auto b = evalBasis(BasisFamily::Cosine, 4, 0.5);
  EXPECT_NEAR(b[0], 1, 1e-15);
  EXPECT_NEAR(b[1], 0, 1e-15);
  EXPECT_NEAR(b[2], -1, 1e-15);
  EXPECT_NEAR(b[3], 0, 1e-15);
  EXPECT_EQ(parseBasisFamily("Cosine"), BasisFamily::Cosine);
  EXPECT_THROW(parseBasisFamily("Legendre"), DomainError);
}

TEST(Fit, FlatSetConstantCoefficient) {
  const auto spec = smallSpec(io::SynthMode::Flat);
  const RawIRs raw = io::synthTestSet(spec);
  const auto model = fitBasisModel("k1", raw, BasisFamily::Fourier, 1);
  for (std::size_t d = 0; d < raw.coords().directions().size(); ++d) {
    const double g = io::synthGain(spec, raw.coords().directions()[d]);
    EXPECT_NEAR(model.coefficients()(d, 0, 0), 20 * std::log10(g), 1e-9);
  }
}

TEST(Fit, MatchesNormalEquations) {
  std::mt19937_64 rng(21);
  const RawIRs raw = noisy(rng, 64);
  for (auto family : {BasisFamily::Fourier, BasisFamily::Cosine}) {
    for (std::size_t K : {1u, 4u, 9u, 16u}) {
      const auto model = fitBasisModel("m", raw, family, K);
      const auto& bins = model.bins();
      ASSERT_EQ(bins.size(), 32u);
      const auto y = raw.getDataM(CoordinateSet(raw.coords().directions(), bins),
                                  DataType::LogMagnitude);
      std::vector<std::vector<double>> B;
      for (std::size_t j = 0; j < bins.size(); ++j) {
        const double x = static_cast<double>(j) / bins.size();
        B.push_back(family == BasisFamily::Fourier ? oracle::fourierRow(K, x)
                                                   : evalBasis(family, K, x));
      }
      for (std::size_t d = 0; d < 3; ++d) {
        std::vector<double> target;
        for (std::size_t j = 0; j < bins.size(); ++j) target.push_back(y.real()(d, j, 0));
        const auto c = oracle::normalEquations(B, target);
        auto rss = [&](auto coef) {
          double s = 0;
          for (std::size_t j = 0; j < B.size(); ++j) {
            double fit = 0;
            for (std::size_t k = 0; k < K; ++k) fit += B[j][k] * coef(k);
            s += (fit - target[j]) * (fit - target[j]);
          }
          return s;
        };
        const double got = rss([&](std::size_t k) { return model.coefficients()(d, k, 0); });
        const double best = rss([&](std::size_t k) { return c[k]; });
        EXPECT_LE(std::abs(got - best), 1e-8 * (1 + best));
        for (std::size_t k = 0; k < K; ++k) EXPECT_NEAR(model.coefficients()(d, k, 0), c[k], 1e-8);
      }
    }
  }
}

TEST(Fit, ResidualNonIncreasingInOrder) {
  std::mt19937_64 rng(22);
  const RawIRs raw = noisy(rng, 64);
  const auto y = raw.getDataM(raw.coords(), DataType::LogMagnitude);
  double previous = INFINITY;
  for (std::size_t K = 1; K <= 32; ++K) {
    const auto model = fitBasisModel("m", raw, BasisFamily::Fourier, K);
    double rss = 0;
    for (std::size_t d = 0; d < 3; ++d)
      for (std::size_t j = 0; j < model.bins().size(); ++j) {
        const double e = model.evaluateDb(d, 0, model.bins()[j]) - y.real()(d, j + 1, 0);
        rss += e * e;
      }
    EXPECT_LE(rss, previous + 1e-9);
    previous = rss;
  }
  EXPECT_LT(previous, 1e-12);
}

TEST(Fit, FullOrderReproducesBinsAndIgnoresDc) {
  std::mt19937_64 rng(23);
  RawIRs raw = noisy(rng, 64);
  // a large DC offset must not affect the fit
  Array3<double> irs = raw.irs();
  for (std::size_t n = 0; n < 64; ++n) irs(0, n, 0) += 50.0;
  const RawIRs shifted("dc", irs, 48000, raw.coords().directions());
  for (auto family : {BasisFamily::Fourier, BasisFamily::Cosine}) {
    const auto model = fitBasisModel("full", shifted, family, 32);
    const auto src = shifted.getDataM(shifted.coords(), DataType::LogMagnitude);
    const auto mod = model.getDataM(CoordinateSet(shifted.coords().directions(), model.bins()),
                                    DataType::LogMagnitude);
    for (std::size_t d = 0; d < 3; ++d)
      for (std::size_t j = 0; j < 32; ++j) EXPECT_NEAR(mod.real()(d, j, 0), src.real()(d, j + 1, 0), 1e-6);
  }
}

TEST(Fit, Preconditions) {
  std::mt19937_64 rng(24);
  const RawIRs raw = noisy(rng, 16);
  EXPECT_THROW(fitBasisModel("m", raw, BasisFamily::Fourier, 0), FitError);
  EXPECT_THROW(fitBasisModel("m", raw, BasisFamily::Fourier, 9), FitError);
  EXPECT_THROW(fitBasisModel("m", raw, BasisFamily::Fourier, 2, std::pair{5000.0, 1000.0}), FitError);
  const auto limited = fitBasisModel("m", raw, BasisFamily::Fourier, 2, std::pair{6000.0, 15000.0});
  EXPECT_EQ(limited.bins(), (std::vector<double>{6000, 9000, 12000, 15000}));
  EXPECT_EQ(limited.frequencyLimits(), (std::pair{6000.0, 15000.0}));
}

TEST(Model, PositionIsAffineOnUniformBins) {
  std::mt19937_64 rng(25);
  const RawIRs raw = noisy(rng, 64);
  const auto model = fitBasisModel("m", raw, BasisFamily::Fourier, 4);
  const auto& bins = model.bins();
  const double N = bins.size();
  std::uniform_real_distribution<double> f(bins.front(), bins.back());
  for (int i = 0; i < 200; ++i) {
    const double v = f(rng);
    const double affine = (v - bins.front()) / (bins.back() - bins.front()) * (N - 1) / N;
    EXPECT_NEAR(model.position(v), affine, 1e-12);
  }
  EXPECT_EQ(model.position(0.0), 0.0);
  EXPECT_EQ(model.position(1e9), (N - 1) / N);
}

TEST(Model, DatatypesExactlyConsistent) {
  const RawIRs raw = io::synthTestSet(smallSpec(io::SynthMode::Lowpass));
  const auto model = fitBasisModel("m", raw, BasisFamily::Fourier, 8);
  const CoordinateSet at(raw.coords().directions(), {100, 777.7, 5000, 23000});
  const auto db = model.getDataV(at, DataType::LogMagnitude).values;
  const auto lin = model.getDataV(at, DataType::LinearMagnitude).values;
  const auto pw = model.getDataV(at, DataType::PowerSpectrum).values;
  for (std::size_t i = 0; i < db.size(); ++i) {
    EXPECT_EQ(lin[i], std::pow(10.0, db[i] / 20.0));
    EXPECT_EQ(pw[i], lin[i] * lin[i]);
  }
}

TEST(Model, ClampsAndRejectsUnsupported) {
  const RawIRs raw = io::synthTestSet(smallSpec(io::SynthMode::Lowpass));
  const auto model = fitBasisModel("m", raw, BasisFamily::Fourier, 8);
  const auto [lo, hi] = model.frequencyLimits();
  const auto v = model.getDataM(CoordinateSet({Direction(3, 2)}, {0, 30000}), DataType::LogMagnitude);
  EXPECT_EQ(v.actualCoords().frequencies(), (std::vector<double>{lo, hi}));
  EXPECT_EQ(v.actualCoords().directions().at(0), Direction(0, 0));
  EXPECT_THROW((void)model.getDataM(raw.coords(), DataType::ImpulseResponses), UnsupportedDataType);
  EXPECT_THROW((void)model.getDataM(raw.coords(), DataType::ComplexSpectrum), UnsupportedDataType);
}

TEST(Model, CoefficientsDependOnlyOnSource) {
  const RawIRs raw = io::synthTestSet(smallSpec(io::SynthMode::Lowpass));
  const auto a = fitBasisModel("a", raw, BasisFamily::Fourier, 6);
  (void)a.getDataM(CoordinateSet({Direction(270, 0), Direction(0, 0)}, {1000}), DataType::LogMagnitude);
  const auto b = fitBasisModel("b", raw, BasisFamily::Fourier, 6);
  EXPECT_EQ(a.coefficients(), b.coefficients());
  std::mt19937_64 rng(26);
  conformance::Failures f;
  conformance::reordering(a, raw.coords(), DataType::LogMagnitude, rng, f);
  EXPECT_TRUE(f.empty());
}

TEST(Model, ConstructorValidation) {
  const std::vector<Direction> dirs{Direction(0, 0)};
  EXPECT_THROW(BasisSpectrumModel("m", BasisFamily::Fourier, Array3<double>(1, 3, 1), {1, 2},
                                  {1, 2}, dirs),
               DimensionError);
  EXPECT_THROW(BasisSpectrumModel("m", BasisFamily::Fourier, Array3<double>(1, 1, 1), {1, 2},
                                  {2, 1}, dirs),
               DomainError);
  EXPECT_THROW(BasisSpectrumModel("m", BasisFamily::Fourier, Array3<double>(2, 1, 1), {1, 2},
                                  {1, 2}, dirs),
               DimensionError);
}

TEST(Model, Conformance) {
  const RawIRs raw = io::synthTestSet(smallSpec(io::SynthMode::Lowpass));
  const auto model = fitBasisModel("m", raw, BasisFamily::Fourier, 10);
  std::mt19937_64 rng(27);
  std::vector<CoordinateSet> reqs{CoordinateSet(raw.coords().directions(), model.bins())};
  for (int i = 0; i < 4; ++i) reqs.push_back(conformance::randomRequest(rng, 8, 10, 30000));
  const auto failures = conformance::runAll(model, reqs, rng);
  EXPECT_TRUE(failures.empty()) << failures.front();
}
