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

#include <algorithm>
#include <cmath>
#include <vector>

#include "sampling.hpp"
#include "srdiff/kernels.hpp"

namespace srdiff::kernels {

std::size_t symmetric_index(std::ptrdiff_t i, std::size_t n) {
  const auto period = static_cast<std::ptrdiff_t>(2 * n);
  std::ptrdiff_t r = i % period;
  if (r < 0) r += period;
  return r < static_cast<std::ptrdiff_t>(n) ? static_cast<std::size_t>(r)
                                            : static_cast<std::size_t>(period - 1 - r);
}

namespace {

double ordered_total(const std::vector<double>& partial) {
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace

void rgb_to_luma(std::span<const std::uint8_t> rgb, const LumaWeights& w,
                 std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::uint8_t* px = rgb.data() + 3 * i;
    out[i] = std::clamp(w.offset + w.r * px[0] + w.g * px[1] + w.b * px[2],
                        w.lo, w.hi);
  }
}

void box_downsample2(const RealMatrix& in, RealMatrix& out) {
  const auto h = static_cast<std::ptrdiff_t>(out.height());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    const auto top = in.row(2 * y);
    const auto bottom = in.row(2 * y + 1);
    auto dst = out.row(y);
    for (std::size_t x = 0; x < dst.size(); ++x) {
      dst[x] = 0.25 * (top[2 * x] + top[2 * x + 1] + bottom[2 * x] +
                       bottom[2 * x + 1]);
    }
  }
}

void bilinear_resize(const RealMatrix& in, RealMatrix& out) {
  const double sx = static_cast<double>(in.width()) / out.width();
  const double sy = static_cast<double>(in.height()) / out.height();
  const auto h = static_cast<std::ptrdiff_t>(out.height());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    const double src_y = detail::source_coordinate(y, sy);
    auto dst = out.row(y);
    for (std::size_t x = 0; x < dst.size(); ++x) {
      dst[x] = detail::clamp_pixel(detail::sample_bilinear(
          in, detail::source_coordinate(x, sx), src_y));
    }
  }
}

void rotate_window(const RealMatrix& in, double theta, RealMatrix& out) {
  const detail::RotationFrame frame = detail::make_frame(in, out, theta);
  const auto h = static_cast<std::ptrdiff_t>(out.height());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    auto dst = out.row(y);
    for (std::size_t x = 0; x < dst.size(); ++x) {
      dst[x] = detail::sample_rotated(in, frame, x, y);
    }
  }
}

void analyze_rows(const RealMatrix& in, std::span<const double> lo,
                  std::span<const double> hi, RealMatrix& lo_out,
                  RealMatrix& hi_out) {
  const std::size_t n = in.width();
  const std::size_t taps = lo.size();
  const std::size_t pad = taps - 1;
  const std::size_t out_len = lo_out.width();
  const auto h = static_cast<std::ptrdiff_t>(in.height());
#pragma omp parallel
  {
    std::vector<double> ext(n + 2 * pad);
#pragma omp for schedule(static)
    for (std::ptrdiff_t y = 0; y < h; ++y) {
      const auto src = in.row(y);
      for (std::size_t t = 0; t < ext.size(); ++t) {
        ext[t] = src[symmetric_index(static_cast<std::ptrdiff_t>(t) -
                                         static_cast<std::ptrdiff_t>(pad),
                                     n)];
      }
      auto lo_dst = lo_out.row(y);
      auto hi_dst = hi_out.row(y);
      for (std::size_t k = 0; k < out_len; ++k) {
        // ext[2k + pad - i] == x[sym(2k - i)]
        const double* window = ext.data() + 2 * k + pad;
        double acc_lo = 0.0;
        double acc_hi = 0.0;
        for (std::size_t i = 0; i < taps; ++i) {
          const double v = *(window - i);
          acc_lo += lo[i] * v;
          acc_hi += hi[i] * v;
        }
        lo_dst[k] = acc_lo;
        hi_dst[k] = acc_hi;
      }
    }
  }
}

void analyze_columns(const RealMatrix& in, std::span<const double> lo,
                     std::span<const double> hi, RealMatrix& lo_out,
                     RealMatrix& hi_out) {
  const std::size_t n = in.height();
  const std::size_t taps = lo.size();
  const auto out_len = static_cast<std::ptrdiff_t>(lo_out.height());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < out_len; ++k) {
    auto lo_dst = lo_out.row(k);
    auto hi_dst = hi_out.row(k);
    std::fill(lo_dst.begin(), lo_dst.end(), 0.0);
    std::fill(hi_dst.begin(), hi_dst.end(), 0.0);
    for (std::size_t i = 0; i < taps; ++i) {
      const auto src = in.row(symmetric_index(
          2 * k - static_cast<std::ptrdiff_t>(i), n));
      for (std::size_t x = 0; x < src.size(); ++x) {
        lo_dst[x] += lo[i] * src[x];
        hi_dst[x] += hi[i] * src[x];
      }
    }
  }
}

double abs_sum(const RealMatrix& m) {
  std::vector<double> partial(m.height());
  const auto h = static_cast<std::ptrdiff_t>(m.height());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    double acc = 0.0;
    for (double v : m.row(y)) acc += std::fabs(v);
    partial[y] = acc;
  }
  return ordered_total(partial);
}

double sum(const RealMatrix& m) {
  std::vector<double> partial(m.height());
  const auto h = static_cast<std::ptrdiff_t>(m.height());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    double acc = 0.0;
    for (double v : m.row(y)) acc += v;
    partial[y] = acc;
  }
  return ordered_total(partial);
}

void squared_error(const RealMatrix& a, const RealMatrix& b, RealMatrix& out) {
  const auto h = static_cast<std::ptrdiff_t>(out.height());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    const auto ra = a.row(y);
    const auto rb = b.row(y);
    auto dst = out.row(y);
    for (std::size_t x = 0; x < dst.size(); ++x) {
      const double d = ra[x] - rb[x];
      dst[x] = d * d;
    }
  }
}

}  // namespace srdiff::kernels
