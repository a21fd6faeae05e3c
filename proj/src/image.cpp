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

#include "srdiff/image.hpp"

#include <cmath>
#include <string>

#include "srdiff/error.hpp"

namespace srdiff {

LumaPlane::LumaPlane(std::size_t width, std::size_t height,
                     std::vector<double> data) {
  if (data.size() != width * height) {
    throw Error(ErrorKind::kInvalidArgument,
                "luma plane needs " + std::to_string(width * height) +
                    " samples, got " + std::to_string(data.size()));
  }
  for (double v : data) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kInvalidArgument, "non-finite luma sample");
    }
  }
  static_cast<Grid<double>&>(*this) = Grid<double>(width, height, std::move(data));
}

LumaPlane LumaPlane::transposed() const {
  LumaPlane out;
  static_cast<Grid<double>&>(out) = Grid<double>::transposed();
  return out;
}

RgbImage::RgbImage(std::size_t width, std::size_t height,
                   std::vector<std::uint8_t> rgb)
    : width_(width), height_(height), data_(std::move(rgb)) {
  if (width_ < kMinSide || height_ < kMinSide) {
    throw Error(ErrorKind::kDimensionTooSmall,
                "image " + std::to_string(width_) + "x" + std::to_string(height_) +
                    " is below the 8x8 minimum");
  }
  if (data_.size() != width_ * height_ * 3) {
    throw Error(ErrorKind::kInvalidArgument, "RGB buffer length mismatch");
  }
}

RgbImage RgbImage::filled(std::size_t width, std::size_t height, std::uint8_t r,
                          std::uint8_t g, std::uint8_t b) {
  std::vector<std::uint8_t> rgb(width * height * 3);
  for (std::size_t i = 0; i < width * height; ++i) {
    rgb[3 * i] = r;
    rgb[3 * i + 1] = g;
    rgb[3 * i + 2] = b;
  }
  return RgbImage(width, height, std::move(rgb));
}

}  // namespace srdiff
