#pragma once

// DIRM: persisted basis-function spectrum models.
//
//   DIRM 1
//   family <tag> K <int> fmin <Hz> fmax <Hz> N <int> D <int> R <int>
//   info <escaped text>
//   dist <R metres>
//   dir <azimuth> <elevation>          (D lines)
//   coef <K values>                    (D*R lines, distance slow, direction fast)
//   bins <N Hz>

#include <string>
#include <vector>

#include "../basis_model.hpp"
#include "text.hpp"

namespace dirkit::io {

inline std::string formatDirm(const BasisSpectrumModel& model) {
  const auto& c = model.coefficients();
  const std::size_t D = c.directions(), K = c.bins(), R = c.distances();
  const auto [fmin, fmax] = model.frequencyLimits();
  std::string out = "DIRM 1\n";
  out += "family " + std::string(toString(model.family())) + " K " + std::to_string(K) +
         " fmin " + formatNumber(fmin) + " fmax " + formatNumber(fmax) + " N " +
         std::to_string(model.bins().size()) + " D " + std::to_string(D) + " R " +
         std::to_string(R) + "\n";
  out += "info " + escapeInfo(model.info()) + "\n";
  appendRecord(out, "dist", model.coords().distances());
  for (const Direction& d : model.coords().directions()) {
    appendRecord(out, "dir", {d.azimuth(), d.elevation()});
  }
  std::vector<double> row(K);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t d = 0; d < D; ++d) {
      for (std::size_t k = 0; k < K; ++k) row[k] = c(d, k, r);
      appendRecord(out, "coef", row);
    }
  }
  appendRecord(out, "bins", model.bins());
  return out;
}

inline BasisSpectrumModel parseDirm(const std::string& text, const std::string& source = "<dirm>") {
  LineReader in(source, text);
  in.magic("DIRM 1");

  const auto h = in.fields(in.next("header"));
  if (h.size() != 14 || h[0] != "family" || h[2] != "K" || h[4] != "fmin" || h[6] != "fmax" ||
      h[8] != "N" || h[10] != "D" || h[12] != "R") {
    in.fail("header must read 'family <tag> K <int> fmin <Hz> fmax <Hz> N <int> D <int> R <int>'");
  }
  BasisFamily family{};
  try {
    family = parseBasisFamily(h[1]);
  } catch (const Error& e) {
    in.fail(e.what());
  }
  const std::size_t K = in.count(h[3]);
  const double fmin = in.number(h[5]), fmax = in.number(h[7]);
  const std::size_t N = in.count(h[9]), D = in.count(h[11]), R = in.count(h[13]);
  if (K < 1) in.fail("K must be at least 1");
  if (N < K) in.fail("N must be at least K");
  if (R < 1) in.fail("R must be at least 1");

  std::string info = in.info(in.next("info record"));
  std::vector<double> dists = in.numbers(in.next("dist record"), "dist", R);

  std::vector<Direction> dirs;
  dirs.reserve(D);
  for (std::size_t d = 0; d < D; ++d) {
    const auto v = in.numbers(in.next("dir record"), "dir", 2);
    try {
      dirs.emplace_back(v[0], v[1]);
    } catch (const Error& e) {
      in.fail(e.what());
    }
  }

  Array3<double> coefficients(D, K, R);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t d = 0; d < D; ++d) {
      const auto v = in.numbers(in.next("coef record"), "coef", K);
      for (std::size_t k = 0; k < K; ++k) coefficients(d, k, r) = v[k];
    }
  }
  std::vector<double> bins = in.numbers(in.next("bins record"), "bins", N);
  in.expectEnd();

  try {
    return BasisSpectrumModel(std::move(info), family, std::move(coefficients), {fmin, fmax},
                              std::move(bins), std::move(dirs), std::move(dists));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, in.line(), e.what());
  }
}

inline void writeDirm(const BasisSpectrumModel& model, const std::string& path) {
  writeFile(path, formatDirm(model));
}

inline BasisSpectrumModel readDirm(const std::string& path) { return parseDirm(readFile(path), path); }

}  // namespace dirkit::io
