#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace dirkit {

using Complex = std::complex<double>;

enum class DataType : std::uint8_t {
  ImpulseResponses,
  ComplexSpectrum,
  LinearMagnitude,
  PowerSpectrum,
  LogMagnitude,
};

inline constexpr DataType kAllDataTypes[] = {
    DataType::ImpulseResponses, DataType::ComplexSpectrum, DataType::LinearMagnitude,
    DataType::PowerSpectrum, DataType::LogMagnitude};

/// Short tag used in files, on the command line and in info strings.
inline std::string_view toString(DataType t) {
  switch (t) {
    case DataType::ImpulseResponses: return "IRs";
    case DataType::ComplexSpectrum: return "complex";
    case DataType::LinearMagnitude: return "lin";
    case DataType::PowerSpectrum: return "power";
    case DataType::LogMagnitude: return "log";
  }
  return "?";
}

/// Descriptive name, e.g. "ImpulseResponses".
inline std::string_view longName(DataType t) {
  switch (t) {
    case DataType::ImpulseResponses: return "ImpulseResponses";
    case DataType::ComplexSpectrum: return "ComplexSpectrum";
    case DataType::LinearMagnitude: return "LinearMagnitude";
    case DataType::PowerSpectrum: return "PowerSpectrum";
    case DataType::LogMagnitude: return "LogMagnitude";
  }
  return "?";
}

inline DataType parseDataType(std::string_view s) {
  for (DataType t : kAllDataTypes) {
    if (s == toString(t)) return t;
  }
  if (s == "ImpulseResponses") return DataType::ImpulseResponses;
  if (s == "ComplexSpectrum") return DataType::ComplexSpectrum;
  if (s == "LinearMagnitude") return DataType::LinearMagnitude;
  if (s == "PowerSpectrum") return DataType::PowerSpectrum;
  if (s == "LogMagnitude") return DataType::LogMagnitude;
  throw DomainError("unknown datatype '" + std::string(s) + "'");
}

inline bool isSpectral(DataType t) { return t != DataType::ImpulseResponses; }

/// Real-valued magnitude forms (plottable without choosing a complex part).
inline bool isMagnitude(DataType t) {
  return t == DataType::LinearMagnitude || t == DataType::PowerSpectrum ||
         t == DataType::LogMagnitude;
}

class DataTypeSet {
 public:
  constexpr DataTypeSet() = default;
  constexpr DataTypeSet(std::initializer_list<DataType> types) {
    for (DataType t : types) bits_ |= bit(t);
  }

  constexpr bool contains(DataType t) const noexcept { return (bits_ & bit(t)) != 0; }

  std::vector<DataType> list() const {
    std::vector<DataType> out;
    for (DataType t : kAllDataTypes) {
      if (contains(t)) out.push_back(t);
    }
    return out;
  }

  friend constexpr bool operator==(DataTypeSet, DataTypeSet) = default;

 private:
  static constexpr std::uint8_t bit(DataType t) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(t));
  }
  std::uint8_t bits_ = 0;
};

/// Magnitudes at or below zero map to this level instead of -inf.
inline constexpr double kLogFloorDb = -300.0;

inline double linearToDb(double magnitude) {
  if (!(magnitude > 0.0)) return kLogFloorDb;
  return std::max(20.0 * std::log10(magnitude), kLogFloorDb);
}

inline double dbToLinear(double db) { return std::pow(10.0, db / 20.0); }

}  // namespace dirkit
