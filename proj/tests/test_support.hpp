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

#ifndef SRDIFF_TESTS_TEST_SUPPORT_HPP_
#define SRDIFF_TESTS_TEST_SUPPORT_HPP_

// Generators and independent oracles shared by the unit and acceptance tests.
// Nothing here calls into srdiff::kernels.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "srdiff/image.hpp"
#include "srdiff/wavelet.hpp"

namespace srdiff::testing {

inline LumaPlane random_plane(std::size_t w, std::size_t h, std::mt19937_64& rng,
                              double lo = 0.0, double hi = 255.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  LumaPlane p(w, h);
  for (double& v : p.samples()) v = u(rng);
  return p;
}

inline LumaPlane constant_plane(std::size_t w, std::size_t h, double c) {
  return LumaPlane(w, h, c);
}

// Horizontal stripes (constant along x) of the given period with a faint
// dither so the diagonal subband never vanishes.
inline LumaPlane stripe_plane(std::size_t w, std::size_t h, std::size_t period,
                              std::mt19937_64& rng, double dither = 0.5) {
  std::uniform_real_distribution<double> u(-dither, dither);
  LumaPlane p(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    const double base = (y % period) < period / 2 ? 60.0 : 190.0;
    for (std::size_t x = 0; x < w; ++x) p(x, y) = base + u(rng);
  }
  return p;
}

// Thick parallel lines running at 45 degrees, faintly dithered.
inline LumaPlane diagonal_line_plane(std::size_t w, std::size_t h, double period,
                                     std::mt19937_64& rng, double dither = 0.5) {
  std::uniform_real_distribution<double> u(-dither, dither);
  LumaPlane p(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double phase = std::fmod(static_cast<double>(x + y), period);
      p(x, y) = (phase < period / 2 ? 50.0 : 200.0) + u(rng);
    }
  }
  return p;
}

// Separable box blur with clamped borders.
inline LumaPlane box_blur(const LumaPlane& p, int radius) {
  const auto w = static_cast<long>(p.width());
  const auto h = static_cast<long>(p.height());
  LumaPlane tmp(p.width(), p.height());
  LumaPlane out(p.width(), p.height());
  const double norm = 1.0 / (2 * radius + 1);
  for (long y = 0; y < h; ++y) {
    for (long x = 0; x < w; ++x) {
      double acc = 0.0;
      for (long d = -radius; d <= radius; ++d) acc += p(std::clamp(x + d, 0L, w - 1), y);
      tmp(x, y) = acc * norm;
    }
  }
  for (long y = 0; y < h; ++y) {
    for (long x = 0; x < w; ++x) {
      double acc = 0.0;
      for (long d = -radius; d <= radius; ++d) acc += tmp(x, std::clamp(y + d, 0L, h - 1));
      out(x, y) = acc * norm;
    }
  }
  return out;
}

// Piecewise-smooth scene: a gradient, a few step edges at random
// orientations, smooth blobs and mild sensor noise. Values stay in (0, 255).
inline LumaPlane natural_synthetic(std::size_t w, std::size_t h, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 2.0);
  const int edges = 1 + static_cast<int>(u(rng) * 5);
  struct Edge { double nx, ny, offset, step; };
  std::vector<Edge> es;
  for (int i = 0; i < edges; ++i) {
    const double a = u(rng) * std::numbers::pi;
    es.push_back({std::cos(a), std::sin(a), (u(rng) - 0.5) * 0.8 * w, (u(rng) - 0.5) * 80.0});
  }
  const double gx = (u(rng) - 0.5) * 0.6;
  const double gy = (u(rng) - 0.5) * 0.6;
  const double fx = 0.02 + 0.2 * u(rng);
  const double fy = 0.02 + 0.2 * u(rng);
  LumaPlane p(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double cx = static_cast<double>(x) - 0.5 * w;
      const double cy = static_cast<double>(y) - 0.5 * h;
      double v = 128.0 + gx * cx + gy * cy + 15.0 * std::sin(fx * cx) * std::cos(fy * cy);
      for (const auto& e : es) {
        if (e.nx * cx + e.ny * cy > e.offset) v += e.step;
      }
      p(x, y) = std::clamp(v + noise(rng), 1.0, 254.0);
    }
  }
  return p;
}

// ---- DWT oracle: explicit mirrored copy, full convolution, decimation ----

inline std::vector<double> mirror_extend(std::span<const double> x, std::size_t pad) {
  const std::size_t n = x.size();
  std::vector<double> ext(n + 2 * pad);
  for (std::size_t t = 0; t < n; ++t) ext[pad + t] = x[t];
  for (std::size_t t = 0; t < pad; ++t) {
    ext[pad - 1 - t] = x[t];          // left:  x0 x1 ... mirrored about -1/2
    ext[pad + n + t] = x[n - 1 - t];  // right: mirrored about n - 1/2
  }
  return ext;
}

// Full linear convolution of the extended signal with f, keeping outputs
// 0, 2, 4, ... of the length n + L - 1 result.
inline std::vector<double> oracle_analyze(std::span<const double> x,
                                          std::span<const double> f) {
  const std::size_t taps = f.size();
  const std::size_t pad = taps - 1;
  const std::vector<double> ext = mirror_extend(x, pad);
  const std::size_t full_len = x.size() + taps - 1;
  std::vector<double> full(full_len, 0.0);
  for (std::size_t j = 0; j < full_len; ++j) {
    // conv[m] = sum_i f[i] ext[m - i], with m = j + pad.
    for (std::size_t i = 0; i < taps; ++i) full[j] += f[i] * ext[j + pad - i];
  }
  std::vector<double> out;
  for (std::size_t j = 0; j < full_len; j += 2) out.push_back(full[j]);
  return out;
}

inline WaveletSubbands oracle_dwt2(const RealMatrix& p, const WaveletFilterPair& f) {
  const std::size_t out_w = (p.width() + f.lowpass.size()) / 2;
  const std::size_t out_h = (p.height() + f.lowpass.size()) / 2;
  RealMatrix rl(out_w, p.height()), rh(out_w, p.height());
  for (std::size_t y = 0; y < p.height(); ++y) {
    const auto row = p.row(y);
    const auto lo = oracle_analyze(row, f.lowpass);
    const auto hi = oracle_analyze(row, f.highpass);
    for (std::size_t k = 0; k < out_w; ++k) {
      rl(k, y) = lo[k];
      rh(k, y) = hi[k];
    }
  }
  WaveletSubbands s{RealMatrix(out_w, out_h), RealMatrix(out_w, out_h),
                    RealMatrix(out_w, out_h), RealMatrix(out_w, out_h)};
  for (std::size_t x = 0; x < out_w; ++x) {
    std::vector<double> col_l(p.height()), col_h(p.height());
    for (std::size_t y = 0; y < p.height(); ++y) {
      col_l[y] = rl(x, y);
      col_h[y] = rh(x, y);
    }
    const auto ll = oracle_analyze(col_l, f.lowpass);
    const auto lh = oracle_analyze(col_l, f.highpass);
    const auto hl = oracle_analyze(col_h, f.lowpass);
    const auto hh = oracle_analyze(col_h, f.highpass);
    for (std::size_t k = 0; k < out_h; ++k) {
      s.ll(x, k) = ll[k];
      s.lh(x, k) = lh[k];
      s.hl(x, k) = hl[k];
      s.hh(x, k) = hh[k];
    }
  }
  return s;
}

// ---- Test-only inverse transform ----

// Adjoint of the even-phase analysis, which inverts it for an orthonormal
// pair: x[s] = sum_k lo[k] h[2k - s] + hi[k] g[2k - s].
inline std::vector<double> synthesize(std::span<const double> lo, std::span<const double> hi,
                                      const WaveletFilterPair& f, std::size_t n) {
  const auto taps = static_cast<long>(f.lowpass.size());
  std::vector<double> x(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t k = 0; k < lo.size(); ++k) {
      const long i = 2 * static_cast<long>(k) - static_cast<long>(s);
      if (i < 0 || i >= taps) continue;
      x[s] += lo[k] * f.lowpass[i] + hi[k] * f.highpass[i];
    }
  }
  return x;
}

inline RealMatrix inverse_dwt2(const WaveletSubbands& s, const WaveletFilterPair& f,
                               std::size_t width, std::size_t height) {
  const std::size_t out_w = s.ll.width();
  RealMatrix rl(out_w, height), rh(out_w, height);
  for (std::size_t x = 0; x < out_w; ++x) {
    std::vector<double> ll, lh, hl, hh;
    for (std::size_t k = 0; k < s.ll.height(); ++k) {
      ll.push_back(s.ll(x, k));
      lh.push_back(s.lh(x, k));
      hl.push_back(s.hl(x, k));
      hh.push_back(s.hh(x, k));
    }
    const auto col_l = synthesize(ll, lh, f, height);
    const auto col_h = synthesize(hl, hh, f, height);
    for (std::size_t y = 0; y < height; ++y) {
      rl(x, y) = col_l[y];
      rh(x, y) = col_h[y];
    }
  }
  RealMatrix out(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    const auto row = synthesize(rl.row(y), rh.row(y), f, width);
    for (std::size_t x = 0; x < width; ++x) out(x, y) = row[x];
  }
  return out;
}

inline double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::fabs(a.samples()[i] - b.samples()[i]));
  }
  return m;
}

// ---- PSNR99 oracle: sort every squared error, average the top k ----

inline double oracle_top_mse(const RealMatrix& a, const RealMatrix& b) {
  std::vector<double> err;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.samples()[i] - b.samples()[i];
    err.push_back(d * d);
  }
  std::sort(err.begin(), err.end(), std::greater<>());
  const std::size_t k = std::max<std::size_t>(1, (err.size() + 99) / 100);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) total += err[i];
  return total / static_cast<double>(k);
}

}  // namespace srdiff::testing

#endif  // SRDIFF_TESTS_TEST_SUPPORT_HPP_
