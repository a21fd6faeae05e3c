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

#include "srdiff/imgproc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "srdiff/error.hpp"
#include "srdiff/kernels.hpp"

namespace srdiff {

namespace {

constexpr kernels::LumaWeights kStudioWeights{
    16.0, 65.481 / 255.0, 128.553 / 255.0, 24.966 / 255.0, 16.0, 235.0};
constexpr kernels::LumaWeights kFullWeights{0.0, 0.299, 0.587, 0.114, 0.0, 255.0};

void require_min_side(const Grid<double>& p, const char* what) {
  if (p.width() < RgbImage::kMinSide || p.height() < RgbImage::kMinSide) {
    throw Error(ErrorKind::kDimensionTooSmall,
                std::string(what) + ": plane " + std::to_string(p.width()) + "x" +
                    std::to_string(p.height()) + " is below 8x8");
  }
}

double keys_cubic(double x) {
  const double ax = std::fabs(x);
  if (ax <= 1.0) return (1.5 * ax - 2.5) * ax * ax + 1.0;
  if (ax < 2.0) return ((-0.5 * ax + 2.5) * ax - 4.0) * ax + 2.0;
  return 0.0;
}

struct Contribution {
  std::vector<std::size_t> index;
  std::vector<double> weight;
};

std::vector<Contribution> bicubic_contributions(std::size_t in_len,
                                                std::size_t out_len,
                                                std::size_t factor) {
  const double f = static_cast<double>(factor);
  std::vector<Contribution> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) {
    const double centre = (static_cast<double>(i) + 0.5) * f - 0.5;
    const auto first = static_cast<std::ptrdiff_t>(std::floor(centre - 2.0 * f));
    const auto last = static_cast<std::ptrdiff_t>(std::ceil(centre + 2.0 * f));
    double total = 0.0;
    for (std::ptrdiff_t j = first; j <= last; ++j) {
      const double w = keys_cubic((centre - static_cast<double>(j)) / f);
      if (w == 0.0) continue;
      out[i].index.push_back(kernels::symmetric_index(j, in_len));
      out[i].weight.push_back(w);
      total += w;
    }
    for (double& w : out[i].weight) w /= total;
  }
  return out;
}

}  // namespace

LumaPlane rgb_to_luma(const RgbImage& img, LumaConvention convention) {
  LumaPlane out(img.width(), img.height());
  kernels::rgb_to_luma(img.data(),
                       convention == LumaConvention::kStudio ? kStudioWeights
                                                             : kFullWeights,
                       out.samples());
  return out;
}

LumaPlane downsample2(const LumaPlane& p) {
  require_min_side(p, "downsample2");
  LumaPlane out(p.width() / 2, p.height() / 2);
  kernels::box_downsample2(p, out);
  return out;
}

LumaPlane bilinear_upsample2(const LumaPlane& p, std::size_t target_w,
                             std::size_t target_h) {
  if (p.empty() || target_w < p.width() || target_h < p.height()) {
    throw Error(ErrorKind::kDimensionTooSmall,
                "upsample target " + std::to_string(target_w) + "x" +
                    std::to_string(target_h) + " is smaller than the source");
  }
  LumaPlane out(target_w, target_h);
  kernels::bilinear_resize(p, out);
  return out;
}

Extent inscribed_extent(std::size_t w, std::size_t h, double theta_deg) {
  if (theta_deg == 0.0) return {w, h};
  const double theta = theta_deg * std::numbers::pi / 180.0;
  const double s = std::fabs(std::sin(theta));
  const double c = std::fabs(std::cos(theta));
  const double wd = static_cast<double>(w);
  const double hd = static_cast<double>(h);
  const bool width_is_longer = wd >= hd;
  const double long_side = width_is_longer ? wd : hd;
  const double short_side = width_is_longer ? hd : wd;
  double wr;
  double hr;
  if (short_side <= 2.0 * s * c * long_side || std::fabs(s - c) < 1e-10) {
    // Half-constrained: two opposite corners touch the longer sides.
    const double x = 0.5 * short_side;
    wr = width_is_longer ? x / s : x / c;
    hr = width_is_longer ? x / c : x / s;
  } else {
    const double cos_2t = c * c - s * s;
    wr = (wd * c - hd * s) / cos_2t;
    hr = (hd * c - wd * s) / cos_2t;
  }
  // Absorb rounding so exact integers are not floored one pixel short.
  const auto floor_px = [](double v) {
    return static_cast<std::size_t>(std::max(0.0, std::floor(v + 1e-9)));
  };
  return {std::min(floor_px(wr), w), std::min(floor_px(hr), h)};
}

LumaPlane rotate(const LumaPlane& p, double theta_deg) {
  if (!(theta_deg >= 0.0 && theta_deg < 90.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "rotation angle " + std::to_string(theta_deg) +
                    " outside [0, 90)");
  }
  if (theta_deg == 0.0) return p;
  const Extent crop = inscribed_extent(p.width(), p.height(), theta_deg);
  if (crop.width < RgbImage::kMinSide || crop.height < RgbImage::kMinSide) {
    throw Error(ErrorKind::kOutputTooSmall,
                "inscribed crop " + std::to_string(crop.width) + "x" +
                    std::to_string(crop.height) + " at " +
                    std::to_string(theta_deg) + " deg is below 8x8");
  }
  LumaPlane out(crop.width, crop.height);
  kernels::rotate_window(p, theta_deg * std::numbers::pi / 180.0, out);
  return out;
}

LumaPlane bicubic_downsample(const LumaPlane& p, std::size_t factor) {
  if (factor == 0 || p.width() / std::max<std::size_t>(factor, 1) == 0 ||
      p.height() / std::max<std::size_t>(factor, 1) == 0) {
    throw Error(ErrorKind::kDimensionTooSmall,
                "bicubic reduction leaves an empty plane");
  }
  const std::size_t out_w = p.width() / factor;
  const std::size_t out_h = p.height() / factor;
  // Crop to a multiple of the factor so the sampling grid is exact.
  const std::size_t in_w = out_w * factor;
  const std::size_t in_h = out_h * factor;

  const auto cols = bicubic_contributions(in_w, out_w, factor);
  const auto rows = bicubic_contributions(in_h, out_h, factor);

  RealMatrix horizontal(out_w, in_h);
  for (std::size_t y = 0; y < in_h; ++y) {
    for (std::size_t x = 0; x < out_w; ++x) {
      double acc = 0.0;
      for (std::size_t t = 0; t < cols[x].index.size(); ++t) {
        acc += cols[x].weight[t] * p(cols[x].index[t], y);
      }
      horizontal(x, y) = acc;
    }
  }
  LumaPlane out(out_w, out_h);
  for (std::size_t y = 0; y < out_h; ++y) {
    for (std::size_t x = 0; x < out_w; ++x) {
      double acc = 0.0;
      for (std::size_t t = 0; t < rows[y].index.size(); ++t) {
        acc += rows[y].weight[t] * horizontal(x, rows[y].index[t]);
      }
      out(x, y) = std::clamp(acc, 0.0, 255.0);
    }
  }
  return out;
}

}  // namespace srdiff
