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

// Reference loops. Kept deliberately plain; tests pin the OpenMP kernels to
// these bit-for-bit.

#include <algorithm>
#include <cmath>
#include <vector>

#include "sampling.hpp"
#include "srdiff/kernels.hpp"

namespace srdiff::kernels::serial {

void rgb_to_luma(std::span<const std::uint8_t> rgb, const LumaWeights& w,
                 std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double y = w.offset + w.r * rgb[3 * i] + w.g * rgb[3 * i + 1] +
                     w.b * rgb[3 * i + 2];
    out[i] = std::min(std::max(y, w.lo), w.hi);
  }
}

void box_downsample2(const RealMatrix& in, RealMatrix& out) {
  for (std::size_t y = 0; y < out.height(); ++y) {
    for (std::size_t x = 0; x < out.width(); ++x) {
      out(x, y) = 0.25 * (in(2 * x, 2 * y) + in(2 * x + 1, 2 * y) +
                          in(2 * x, 2 * y + 1) + in(2 * x + 1, 2 * y + 1));
    }
  }
}

void bilinear_resize(const RealMatrix& in, RealMatrix& out) {
  const double sx = static_cast<double>(in.width()) / out.width();
  const double sy = static_cast<double>(in.height()) / out.height();
  for (std::size_t y = 0; y < out.height(); ++y) {
    for (std::size_t x = 0; x < out.width(); ++x) {
      out(x, y) = detail::clamp_pixel(detail::sample_bilinear(
          in, detail::source_coordinate(x, sx), detail::source_coordinate(y, sy)));
    }
  }
}

void rotate_window(const RealMatrix& in, double theta, RealMatrix& out) {
  const detail::RotationFrame frame = detail::make_frame(in, out, theta);
  for (std::size_t y = 0; y < out.height(); ++y) {
    for (std::size_t x = 0; x < out.width(); ++x) {
      out(x, y) = detail::sample_rotated(in, frame, x, y);
    }
  }
}

void analyze_rows(const RealMatrix& in, std::span<const double> lo,
                  std::span<const double> hi, RealMatrix& lo_out,
                  RealMatrix& hi_out) {
  const std::size_t n = in.width();
  for (std::size_t y = 0; y < in.height(); ++y) {
    for (std::size_t k = 0; k < lo_out.width(); ++k) {
      double acc_lo = 0.0;
      double acc_hi = 0.0;
      for (std::size_t i = 0; i < lo.size(); ++i) {
        const double v = in(symmetric_index(2 * static_cast<std::ptrdiff_t>(k) -
                                                static_cast<std::ptrdiff_t>(i),
                                            n),
                            y);
        acc_lo += lo[i] * v;
        acc_hi += hi[i] * v;
      }
      lo_out(k, y) = acc_lo;
      hi_out(k, y) = acc_hi;
    }
  }
}

void analyze_columns(const RealMatrix& in, std::span<const double> lo,
                     std::span<const double> hi, RealMatrix& lo_out,
                     RealMatrix& hi_out) {
  const std::size_t n = in.height();
  for (std::size_t x = 0; x < in.width(); ++x) {
    for (std::size_t k = 0; k < lo_out.height(); ++k) {
      double acc_lo = 0.0;
      double acc_hi = 0.0;
      for (std::size_t i = 0; i < lo.size(); ++i) {
        const double v = in(x, symmetric_index(2 * static_cast<std::ptrdiff_t>(k) -
                                                   static_cast<std::ptrdiff_t>(i),
                                               n));
        acc_lo += lo[i] * v;
        acc_hi += hi[i] * v;
      }
      lo_out(x, k) = acc_lo;
      hi_out(x, k) = acc_hi;
    }
  }
}

double abs_sum(const RealMatrix& m) {
  double total = 0.0;
  for (std::size_t y = 0; y < m.height(); ++y) {
    double acc = 0.0;
    for (std::size_t x = 0; x < m.width(); ++x) acc += std::fabs(m(x, y));
    total += acc;
  }
  return total;
}

double sum(const RealMatrix& m) {
  double total = 0.0;
  for (std::size_t y = 0; y < m.height(); ++y) {
    double acc = 0.0;
    for (std::size_t x = 0; x < m.width(); ++x) acc += m(x, y);
    total += acc;
  }
  return total;
}

void squared_error(const RealMatrix& a, const RealMatrix& b, RealMatrix& out) {
  for (std::size_t y = 0; y < out.height(); ++y) {
    for (std::size_t x = 0; x < out.width(); ++x) {
      const double d = a(x, y) - b(x, y);
      out(x, y) = d * d;
    }
  }
}

}  // namespace srdiff::kernels::serial
