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

#include "srdiff/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "srdiff/error.hpp"
#include "srdiff/imgproc.hpp"
#include "srdiff/kernels.hpp"

namespace srdiff {

namespace {

void require_same_shape(const RealMatrix& a, const RealMatrix& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                    " vs " + std::to_string(b.width()) + "x" +
                    std::to_string(b.height()));
  }
}

RealMatrix crop(const RealMatrix& m, std::size_t x0, std::size_t y0,
                std::size_t w, std::size_t h) {
  RealMatrix out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    const auto src = m.row(y0 + y).subspan(x0, w);
    std::copy(src.begin(), src.end(), out.row(y).begin());
  }
  return out;
}

RealMatrix shaved(const RealMatrix& m, std::size_t shave) {
  if (shave == 0) return m;
  if (2 * shave >= m.width() || 2 * shave >= m.height()) {
    throw Error(ErrorKind::kDimensionTooSmall,
                "border shave " + std::to_string(shave) + " removes every pixel");
  }
  return crop(m, shave, shave, m.width() - 2 * shave, m.height() - 2 * shave);
}

RealMatrix squared_error_map(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix err(a.width(), a.height());
  kernels::squared_error(a, b, err);
  return err;
}

}  // namespace

MetricValue psnr_from_mse(double mse) {
  if (mse < kCapMse) return {kCapDb, true};
  return {20.0 * std::log10(kPeak / std::sqrt(mse)), false};
}

std::size_t top_one_percent_count(std::size_t n) {
  return std::max<std::size_t>(1, (n + 99) / 100);
}

MetricValue psnr(const LumaPlane& a, const LumaPlane& b, const MetricOptions& opt) {
  require_same_shape(a, b);
  const RealMatrix err = squared_error_map(shaved(a, opt.shave), shaved(b, opt.shave));
  return psnr_from_mse(kernels::sum(err) / static_cast<double>(err.size()));
}

Psnr99Result psnr99(const LumaPlane& hr, const LumaPlane& sr,
                    const MetricOptions& opt) {
  require_same_shape(hr, sr);
  RealMatrix err = squared_error_map(shaved(hr, opt.shave), shaved(sr, opt.shave));
  const std::size_t n = err.size();
  const std::size_t k = top_one_percent_count(n);

  // Strict total order: larger error first, then lower index.
  const auto values = err.samples();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto before = [&](std::size_t i, std::size_t j) {
    return values[i] != values[j] ? values[i] > values[j] : i < j;
  };
  std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k - 1),
                   order.end(), before);
  order.resize(k);
  std::sort(order.begin(), order.end(), before);

  Psnr99Result result{{}, {err.width(), err.height(), RealMatrix{},
                           Grid<std::uint8_t>(err.width(), err.height()), k}};
  // Summed largest-first so the total matches a full descending sort.
  double total = 0.0;
  auto mask = result.map.top_mask.samples();
  for (std::size_t idx : order) {
    total += values[idx];
    mask[idx] = 1;
  }
  result.value = psnr_from_mse(total / static_cast<double>(k));
  result.map.squared_error = std::move(err);
  return result;
}

MetricValue compute_hfi(const LumaPlane& lr) {
  if (lr.width() < RgbImage::kMinSide || lr.height() < RgbImage::kMinSide) {
    throw Error(ErrorKind::kDimensionTooSmall,
                "HFI needs at least 8x8, got " + std::to_string(lr.width()) + "x" +
                    std::to_string(lr.height()));
  }
  const std::size_t w = lr.width() & ~std::size_t{1};
  const std::size_t h = lr.height() & ~std::size_t{1};
  LumaPlane even;
  static_cast<RealMatrix&>(even) = crop(lr, 0, 0, w, h);
  const LumaPlane round_trip = bilinear_upsample2(downsample2(even), w, h);
  return psnr(even, round_trip);
}

RgbImage render_artifact_map(const ErrorMap& map, const LumaPlane& background) {
  if (map.width != background.width() || map.height != background.height() ||
      map.top_mask.width() != map.width || map.top_mask.height() != map.height) {
    throw Error(ErrorKind::kDimensionMismatch,
                "artifact map and background differ in size");
  }
  std::vector<std::uint8_t> rgb(map.width * map.height * 3);
  const auto samples = background.samples();
  const auto mask = map.top_mask.samples();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::uint8_t* px = rgb.data() + 3 * i;
    if (mask[i] != 0) {
      px[0] = 255;
      px[1] = 0;
      px[2] = 0;
    } else {
      const auto grey = static_cast<std::uint8_t>(
          std::lround(std::clamp(samples[i], 0.0, 255.0)));
      px[0] = px[1] = px[2] = grey;
    }
  }
  return RgbImage(map.width, map.height, std::move(rgb));
}

}  // namespace srdiff
