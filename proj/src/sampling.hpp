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

#ifndef SRDIFF_SRC_SAMPLING_HPP_
#define SRDIFF_SRC_SAMPLING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "srdiff/image.hpp"

namespace srdiff::detail {

inline double clamp_pixel(double v) { return std::clamp(v, 0.0, 255.0); }

// Bilinear sample with the coordinate clamped into the valid range. Written
// as a lerp so constant neighbourhoods reproduce the constant exactly.
inline double sample_bilinear(const RealMatrix& m, double sx, double sy) {
  const double max_x = static_cast<double>(m.width() - 1);
  const double max_y = static_cast<double>(m.height() - 1);
  sx = std::clamp(sx, 0.0, max_x);
  sy = std::clamp(sy, 0.0, max_y);
  const auto x0 = static_cast<std::size_t>(std::floor(sx));
  const auto y0 = static_cast<std::size_t>(std::floor(sy));
  const std::size_t x1 = std::min(x0 + 1, m.width() - 1);
  const std::size_t y1 = std::min(y0 + 1, m.height() - 1);
  const double fx = sx - static_cast<double>(x0);
  const double fy = sy - static_cast<double>(y0);
  const double top = m(x0, y0) + fx * (m(x1, y0) - m(x0, y0));
  const double bottom = m(x0, y1) + fx * (m(x1, y1) - m(x0, y1));
  return top + fy * (bottom - top);
}

// Source coordinate of output index i under align-corners-false resizing.
inline double source_coordinate(std::size_t i, double scale) {
  return (static_cast<double>(i) + 0.5) * scale - 0.5;
}

struct RotationFrame {
  double cos_t;
  double sin_t;
  double in_cx;
  double in_cy;
  double out_cx;
  double out_cy;
};

inline RotationFrame make_frame(const RealMatrix& in, const RealMatrix& out,
                                double theta) {
  return {std::cos(theta),
          std::sin(theta),
          0.5 * static_cast<double>(in.width()),
          0.5 * static_cast<double>(in.height()),
          0.5 * static_cast<double>(out.width()),
          0.5 * static_cast<double>(out.height())};
}

inline double sample_rotated(const RealMatrix& in, const RotationFrame& f,
                             std::size_t x, std::size_t y) {
  const double xo = static_cast<double>(x) + 0.5 - f.out_cx;
  const double yo = static_cast<double>(y) + 0.5 - f.out_cy;
  const double xs = f.cos_t * xo + f.sin_t * yo;
  const double ys = -f.sin_t * xo + f.cos_t * yo;
  return clamp_pixel(sample_bilinear(in, xs + f.in_cx - 0.5, ys + f.in_cy - 0.5));
}

}  // namespace srdiff::detail

#endif  // SRDIFF_SRC_SAMPLING_HPP_
