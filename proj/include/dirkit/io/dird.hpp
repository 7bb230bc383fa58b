#pragma once

// DIRD: plain-text impulse-response datasets.
//
//   DIRD 1
//   fs <Hz> D <int> L <int> R <int>
//   info <escaped text>
//   dist <R metres>
//   dir <azimuth> <elevation>          (D lines)
//   ir <L samples>                     (D*R lines, distance slow, direction fast)

#include <string>
#include <vector>

#include "../raw_irs.hpp"
#include "text.hpp"

namespace dirkit::io {

inline std::string formatDird(const RawIRs& raw) {
  const auto& irs = raw.irs();
  const std::size_t D = irs.directions(), L = irs.bins(), R = irs.distances();
  std::string out = "DIRD 1\n";
  out += "fs " + formatNumber(raw.sampleRate()) + " D " + std::to_string(D) + " L " +
         std::to_string(L) + " R " + std::to_string(R) + "\n";
  out += "info " + escapeInfo(raw.info()) + "\n";
  appendRecord(out, "dist", raw.coords().distances());
  for (const Direction& d : raw.coords().directions()) {
    appendRecord(out, "dir", {d.azimuth(), d.elevation()});
  }
  std::vector<double> row(L);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t d = 0; d < D; ++d) {
      for (std::size_t n = 0; n < L; ++n) row[n] = irs(d, n, r);
      appendRecord(out, "ir", row);
    }
  }
  return out;
}

inline RawIRs parseDird(const std::string& text, const std::string& source = "<dird>") {
  LineReader in(source, text);
  in.magic("DIRD 1");

  const auto h = in.fields(in.next("header"));
  if (h.size() != 8 || h[0] != "fs" || h[2] != "D" || h[4] != "L" || h[6] != "R") {
    in.fail("header must read 'fs <Hz> D <int> L <int> R <int>'");
  }
  const double fs = in.number(h[1]);
  const std::size_t D = in.count(h[3]), L = in.count(h[5]), R = in.count(h[7]);
  if (!(fs > 0.0)) in.fail("sample rate must be positive");
  if (L < 2) in.fail("L must be at least 2");
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

  Array3<double> irs(D, L, R);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t d = 0; d < D; ++d) {
      const auto v = in.numbers(in.next("ir record"), "ir", L);
      for (std::size_t n = 0; n < L; ++n) irs(d, n, r) = v[n];
    }
  }
  in.expectEnd();

  try {
    return RawIRs(std::move(info), std::move(irs), fs, std::move(dirs), std::move(dists));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, in.line(), e.what());
  }
}

inline void writeDird(const RawIRs& raw, const std::string& path) {
  writeFile(path, formatDird(raw));
}

inline RawIRs readDird(const std::string& path) { return parseDird(readFile(path), path); }

}  // namespace dirkit::io
