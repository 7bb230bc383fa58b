#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "dirkit/io/dird.hpp"
#include "dirkit/io/dirm.hpp"
#include "dirkit/io/synth.hpp"
#include "malformed_corpus.hpp"
#include "oracles.hpp"

using namespace dirkit;

namespace {

RawIRs randomRaw(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dn(1, 6), ln(2, 20), rn(1, 3);
  std::normal_distribution<double> v(0, 1);
  const std::size_t D = dn(rng), L = ln(rng), R = rn(rng);
  Array3<double> irs(D, L, R);
  for (double& x : irs.flat()) x = v(rng) * std::pow(10.0, static_cast<int>(rng() % 9) - 4);
  std::vector<Direction> dirs;
  while (dirs.size() < D) {
    const auto [a, e] = oracle::randomDirection(rng);
    dirs.emplace_back(a, e);
  }
  std::vector<double> dists;
  double r = 0.1;
  for (std::size_t i = 0; i < R; ++i) dists.push_back(r += std::abs(v(rng)) + 1e-3);
  return RawIRs("random set\nline two \\ backslash", irs, 1000 + 47000 * std::abs(v(rng)), dirs, dists);
}

BasisSpectrumModel randomModel(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dn(1, 5), kn(1, 8), rn(1, 2);
  std::normal_distribution<double> v(0, 10);
  const std::size_t D = dn(rng), K = kn(rng), R = rn(rng), N = K + 3;
  Array3<double> c(D, K, R);
  for (double& x : c.flat()) x = v(rng);
  std::vector<Direction> dirs;
  for (std::size_t d = 0; d < D; ++d) dirs.emplace_back(37.3 * d, -20.0 + 9.1 * d);
  std::vector<double> bins;
  for (std::size_t j = 0; j < N; ++j) bins.push_back(93.75 * (j + 1) + 0.1 / 3.0);
  std::vector<double> dists{0.7, 1.9};
  dists.resize(R);
  return BasisSpectrumModel("model \\n literal", rng() % 2 ? BasisFamily::Fourier : BasisFamily::Cosine,
                            c, {bins.front() / 3.0, bins.back()}, bins, dirs, dists);
}

}  // namespace

TEST(Dird, ParsesReferenceText) {
  const RawIRs raw = io::parseDird(corpus::validDird());
  EXPECT_EQ(raw.info(), "two directions");
  EXPECT_EQ(raw.sampleRate(), 48000.0);
  EXPECT_EQ(raw.coords().directions().size(), 2u);
  EXPECT_EQ(raw.irs()(1, 1, 0), 0.25);
  EXPECT_EQ(io::formatDird(raw), corpus::validDird());
}

TEST(Dird, RandomRoundTripIsExact) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    const RawIRs a = randomRaw(rng);
    const RawIRs b = io::parseDird(io::formatDird(a));
    EXPECT_EQ(a.info(), b.info());
    EXPECT_EQ(a.irs(), b.irs());
    EXPECT_EQ(a.sampleRate(), b.sampleRate());
    EXPECT_EQ(a.coords(), b.coords());
  }
}

TEST(Dird, FileRoundTrip) {
  std::mt19937_64 rng(42);
  const RawIRs a = randomRaw(rng);
  const auto path = (std::filesystem::temp_directory_path() / "dirkit_roundtrip.dird").string();
  io::writeDird(a, path);
  const RawIRs b = io::readDird(path);
  EXPECT_EQ(a.irs(), b.irs());
  std::filesystem::remove(path);
  EXPECT_THROW(io::readDird(path), IoError);
}

TEST(Dirm, RandomRoundTripIsExact) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto a = randomModel(rng);
    const auto b = io::parseDirm(io::formatDirm(a));
    EXPECT_EQ(a.info(), b.info());
    EXPECT_EQ(a.family(), b.family());
    EXPECT_EQ(a.coefficients(), b.coefficients());
    EXPECT_EQ(a.bins(), b.bins());
    EXPECT_EQ(a.coords(), b.coords());
    EXPECT_EQ(io::formatDirm(b), io::formatDirm(a));
  }
}

TEST(Dird, MalformedCorpusRejectedWithLocation) {
  const auto cases = corpus::malformedDird();
  ASSERT_GE(cases.size(), 10u);
  for (const auto& c : cases) {
    try {
      (void)io::parseDird(c.text, "case.dird");
      ADD_FAILURE() << c.name << ": accepted";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.name << ": " << e.what();
      EXPECT_EQ(std::string(e.what()).rfind("case.dird:" + std::to_string(c.line) + ": ", 0), 0u)
          << e.what();
    }
  }
}

TEST(Dirm, MalformedInputsRejected) {
  std::mt19937_64 rng(44);
  const std::string ok = io::formatDirm(randomModel(rng));
  EXPECT_THROW(io::parseDirm(corpus::replaceLine(ok, 2, "family Legendre K 1 fmin 1 fmax 2 N 1 D 1 R 1")), ParseError);
  EXPECT_THROW(io::parseDirm(corpus::replaceLine(ok, 1, "DIRD 1")), ParseError);
  EXPECT_THROW(io::parseDirm(ok.substr(0, ok.rfind("bins"))), ParseError);
  EXPECT_THROW(io::parseDirm(ok + "\n"), ParseError);
}

TEST(Synth, GridLayout) {
  const io::SynthSpec s;
  const auto dirs = io::synthGrid(s);
  EXPECT_EQ(dirs.size(), 13u * 72u + 1u);
  EXPECT_EQ(dirs.front(), Direction(0, -40));
  EXPECT_EQ(dirs.back(), Direction(0, 90));
  io::SynthSpec horizontal;
  horizontal.elevationMin = horizontal.elevationMax = 0;
  EXPECT_EQ(io::synthGrid(horizontal).size(), 72u);
  io::SynthSpec bad;
  bad.azimuthStep = 0;
  EXPECT_THROW(io::synthGrid(bad), DomainError);
}

TEST(Synth, GainFormula) {
  const io::SynthSpec s;
  EXPECT_NEAR(io::synthGain(s, Direction(90, 0)), 1.0, 1e-15);
  EXPECT_NEAR(io::synthGain(s, Direction(270, 0)), 0.2, 1e-15);
  EXPECT_NEAR(io::synthGain(s, Direction(0, 0)), 0.6, 1e-15);
  EXPECT_NEAR(io::synthGain(s, Direction(0, 90)), 0.6, 1e-15);
}

TEST(Synth, FlatModeLogMagnitudeIsConstant) {
  io::SynthSpec s;
  s.azimuthStep = 60;
  s.elevationStep = 45;
  s.length = 32;
  const RawIRs raw = io::synthTestSet(s);
  const auto v = raw.getDataM(raw.coords(), DataType::LogMagnitude);
  for (std::size_t d = 0; d < v.directions(); ++d) {
    const double expected = 20 * std::log10(io::synthGain(s, raw.coords().directions()[d]));
    for (std::size_t k = 0; k < v.bins(); ++k) EXPECT_NEAR(v.real()(d, k, 0), expected, 1e-12);
  }
}

TEST(Synth, LowpassClosedForm) {
  io::SynthSpec s;
  s.mode = io::SynthMode::Lowpass;
  s.azimuthStep = 90;
  s.elevationMin = s.elevationMax = 0;
  const RawIRs raw = io::synthTestSet(s);
  const auto v = raw.getDataM(raw.coords(), DataType::LinearMagnitude);
  for (std::size_t d = 0; d < v.directions(); ++d) {
    const double g = io::synthGain(s, raw.coords().directions()[d]);
    for (std::size_t k = 0; k < v.bins(); ++k) {
      const double expected = g * std::abs(1.0 + 0.5 * std::polar(1.0, -2 * oracle::kPi * k / 256.0));
      EXPECT_NEAR(v.real()(d, k, 0), expected, 1e-12);
    }
  }
  io::SynthSpec bad = s;
  bad.a = 1.0;
  EXPECT_THROW(io::synthTestSet(bad), DomainError);
  bad = s;
  bad.g1 = 0.7;
  EXPECT_THROW(io::synthTestSet(bad), DomainError);
}

TEST(Synth, WriteReadRoundTrip) {
  io::SynthSpec s;
  s.mode = io::SynthMode::Lowpass;
  s.azimuthStep = 30;
  s.elevationStep = 30;
  s.length = 16;
  const RawIRs a = io::synthTestSet(s);
  const RawIRs b = io::parseDird(io::formatDird(a));
  EXPECT_EQ(a.irs(), b.irs());
  EXPECT_EQ(a.coords(), b.coords());
  EXPECT_EQ(a.info(), b.info());
}
