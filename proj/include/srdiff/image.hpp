// Copyright 2026 The srdiff Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SRDIFF_IMAGE_HPP_
#define SRDIFF_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace srdiff {

// Row-major 2-D array. x indexes columns, y indexes rows.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t width, std::size_t height, T fill = T{})
      : width_(width), height_(height), data_(width * height, fill) {}
  Grid(std::size_t width, std::size_t height, std::vector<T> data);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t x, std::size_t y) { return data_[y * width_ + x]; }
  const T& operator()(std::size_t x, std::size_t y) const {
    return data_[y * width_ + x];
  }

  std::span<T> row(std::size_t y) { return {data_.data() + y * width_, width_}; }
  std::span<const T> row(std::size_t y) const {
    return {data_.data() + y * width_, width_};
  }

  std::span<T> samples() noexcept { return data_; }
  std::span<const T> samples() const noexcept { return data_; }
  const std::vector<T>& vector() const noexcept { return data_; }

  Grid transposed() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<T> data_;
};

template <typename T>
Grid<T>::Grid(std::size_t width, std::size_t height, std::vector<T> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (data_.size() != width_ * height_) {
    throw std::invalid_argument("grid data length does not match dimensions");
  }
}

template <typename T>
Grid<T> Grid<T>::transposed() const {
  Grid out(height_, width_);
  for (std::size_t y = 0; y < height_; ++y) {
    for (std::size_t x = 0; x < width_; ++x) out(y, x) = (*this)(x, y);
  }
  return out;
}

using RealMatrix = Grid<double>;

// Luminance samples. Resampling and rotation keep them in [0, 255]; direct
// construction only requires finite values.
class LumaPlane : public Grid<double> {
 public:
  LumaPlane() = default;
  LumaPlane(std::size_t width, std::size_t height, double fill = 0.0)
      : Grid(width, height, fill) {}
  // Throws kInvalidArgument on a size mismatch or non-finite sample.
  LumaPlane(std::size_t width, std::size_t height, std::vector<double> data);

  LumaPlane transposed() const;
};

// 8-bit interleaved RGB, at least 8x8.
class RgbImage {
 public:
  static constexpr std::size_t kMinSide = 8;

  // Throws kDimensionTooSmall or kInvalidArgument.
  RgbImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> rgb);
  static RgbImage filled(std::size_t width, std::size_t height, std::uint8_t r,
                         std::uint8_t g, std::uint8_t b);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::span<const std::uint8_t> data() const noexcept { return data_; }
  std::span<std::uint8_t> data() noexcept { return data_; }

  std::span<std::uint8_t, 3> pixel(std::size_t x, std::size_t y) {
    return std::span<std::uint8_t, 3>(data_.data() + 3 * (y * width_ + x), 3);
  }
  std::span<const std::uint8_t, 3> pixel(std::size_t x, std::size_t y) const {
    return std::span<const std::uint8_t, 3>(data_.data() + 3 * (y * width_ + x),
                                            3);
  }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> data_;
};

}  // namespace srdiff

#endif  // SRDIFF_IMAGE_HPP_
