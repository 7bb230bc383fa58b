#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace dirkit {

/// Dense 3-D array indexed (direction, frequency-or-time, distance).
///
/// Storage is direction-fastest: element (d, f, r) lives at
/// d + D * (f + F * r). The flat view is therefore exactly the vector
/// layout returned by Directivity::getDataV.
template <typename T>
class Array3 {
 public:
  Array3() = default;
  Array3(std::size_t directions, std::size_t bins, std::size_t distances, T fill = T{})
      : d_(directions), f_(bins), r_(distances), data_(directions * bins * distances, fill) {}

  Array3(std::size_t directions, std::size_t bins, std::size_t distances, std::vector<T> flat)
      : d_(directions), f_(bins), r_(distances), data_(std::move(flat)) {
    if (data_.size() != d_ * f_ * r_) {
      throw DimensionError("Array3: flat buffer has " + std::to_string(data_.size()) +
                           " elements, shape requires " + std::to_string(d_ * f_ * r_));
    }
  }

  std::size_t directions() const noexcept { return d_; }
  std::size_t bins() const noexcept { return f_; }
  std::size_t distances() const noexcept { return r_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::size_t index(std::size_t d, std::size_t f, std::size_t r) const noexcept {
    return d + d_ * (f + f_ * r);
  }

  T& operator()(std::size_t d, std::size_t f, std::size_t r) { return data_[index(d, f, r)]; }
  const T& operator()(std::size_t d, std::size_t f, std::size_t r) const {
    return data_[index(d, f, r)];
  }

  std::span<T> flat() noexcept { return data_; }
  std::span<const T> flat() const noexcept { return data_; }

  friend bool operator==(const Array3&, const Array3&) = default;

 private:
  std::size_t d_ = 0;
  std::size_t f_ = 0;
  std::size_t r_ = 0;
  std::vector<T> data_;
};

}  // namespace dirkit
