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

#ifndef SRDIFF_KERNELS_HPP_
#define SRDIFF_KERNELS_HPP_

// Data-parallel inner loops behind imgproc, wavelet and metrics.
//
// Two implementations share one set of signatures: srdiff::kernels runs the
// outer loop under OpenMP, srdiff::kernels::serial is the plain reference.
// Both perform the same per-element arithmetic in the same order and reduce
// through per-row partial sums added in row order, so their results are
// bit-identical for any thread count.

#include <cstddef>
#include <cstdint>
#include <span>

#include "srdiff/image.hpp"

namespace srdiff::kernels {

// Y = clamp(offset + r*R + g*G + b*B, lo, hi) with R, G, B in [0, 255].
struct LumaWeights {
  double offset;
  double r;
  double g;
  double b;
  double lo;
  double hi;
};

// Half-point symmetric extension: ... x1 x0 | x0 x1 ... x(n-1) | x(n-1) ...
std::size_t symmetric_index(std::ptrdiff_t i, std::size_t n);

// Length of one analysis output for an input of length n and filter length L.
constexpr std::size_t analysis_length(std::size_t n, std::size_t taps) {
  return (n + taps) / 2;  // ceil((n + taps - 1) / 2)
}

void rgb_to_luma(std::span<const std::uint8_t> rgb, const LumaWeights& w,
                 std::span<double> out);
// out must be (in.width/2) x (in.height/2).
void box_downsample2(const RealMatrix& in, RealMatrix& out);
// Align-corners-false bilinear resize into out's dimensions, clamped to [0, 255].
void bilinear_resize(const RealMatrix& in, RealMatrix& out);
// Rotates about the centre by theta (radians, counter-clockwise) and samples
// the centred out.width x out.height window bilinearly, clamped to [0, 255].
void rotate_window(const RealMatrix& in, double theta, RealMatrix& out);
// Filters every row with lo and hi and keeps even phases:
//   out[k] = sum_i f[i] * x[sym(2k - i)]
void analyze_rows(const RealMatrix& in, std::span<const double> lo,
                  std::span<const double> hi, RealMatrix& lo_out,
                  RealMatrix& hi_out);
void analyze_columns(const RealMatrix& in, std::span<const double> lo,
                     std::span<const double> hi, RealMatrix& lo_out,
                     RealMatrix& hi_out);
double abs_sum(const RealMatrix& m);
double sum(const RealMatrix& m);
void squared_error(const RealMatrix& a, const RealMatrix& b, RealMatrix& out);

namespace serial {

void rgb_to_luma(std::span<const std::uint8_t> rgb, const LumaWeights& w,
                 std::span<double> out);
void box_downsample2(const RealMatrix& in, RealMatrix& out);
void bilinear_resize(const RealMatrix& in, RealMatrix& out);
void rotate_window(const RealMatrix& in, double theta, RealMatrix& out);
void analyze_rows(const RealMatrix& in, std::span<const double> lo,
                  std::span<const double> hi, RealMatrix& lo_out,
                  RealMatrix& hi_out);
void analyze_columns(const RealMatrix& in, std::span<const double> lo,
                     std::span<const double> hi, RealMatrix& lo_out,
                     RealMatrix& hi_out);
double abs_sum(const RealMatrix& m);
double sum(const RealMatrix& m);
void squared_error(const RealMatrix& a, const RealMatrix& b, RealMatrix& out);

}  // namespace serial
}  // namespace srdiff::kernels

#endif  // SRDIFF_KERNELS_HPP_
