#pragma once

// Mono 32-bit IEEE-float WAV.

#include <cstdint>
#include <cstring>
#include <span>
#include <string>

#include "../io/text.hpp"

namespace dirkit::plot {

namespace wav_detail {

inline void put16(std::string& out, std::uint16_t v) {
  out += static_cast<char>(v & 0xff);
  out += static_cast<char>((v >> 8) & 0xff);
}

inline void put32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xff);
}

}  // namespace wav_detail

inline std::string encodeWavFloat(std::span<const double> samples, std::uint32_t sampleRate) {
  using namespace wav_detail;
  const auto n = static_cast<std::uint32_t>(samples.size());
  const std::uint32_t dataBytes = n * 4;
  std::string out;
  out.reserve(58 + dataBytes);
  out += "RIFF";
  put32(out, 4 + 26 + 12 + 8 + dataBytes);
  out += "WAVE";
  out += "fmt ";
  put32(out, 18);
  put16(out, 3);  // WAVE_FORMAT_IEEE_FLOAT
  put16(out, 1);
  put32(out, sampleRate);
  put32(out, sampleRate * 4);
  put16(out, 4);
  put16(out, 32);
  put16(out, 0);
  out += "fact";
  put32(out, 4);
  put32(out, n);
  out += "data";
  put32(out, dataBytes);
  for (double s : samples) {
    const float f = static_cast<float>(s);
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put32(out, bits);
  }
  return out;
}

inline void writeWavFloat(const std::string& path, std::span<const double> samples,
                          std::uint32_t sampleRate) {
  io::writeFile(path, encodeWavFloat(samples, sampleRate));
}

}  // namespace dirkit::plot
