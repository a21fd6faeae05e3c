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

#ifndef SRDIFF_METRICS_HPP_
#define SRDIFF_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "srdiff/image.hpp"

namespace srdiff {

inline constexpr double kPeak = 255.0;
inline constexpr double kCapDb = 100.0;
inline constexpr double kCapMse = 1e-12;

struct MetricValue {
  double db;
  bool capped;
};

// 20*log10(255 / sqrt(mse)), or 100 dB flagged as capped when mse < 1e-12.
MetricValue psnr_from_mse(double mse);

struct ErrorMap {
  std::size_t width = 0;
  std::size_t height = 0;
  RealMatrix squared_error;
  Grid<std::uint8_t> top_mask;  // 1 for selected pixels
  std::size_t k = 0;
};

struct MetricOptions {
  // Pixels removed from every border before comparison.
  std::size_t shave = 0;
};

// ceil(0.01 * n), at least 1.
std::size_t top_one_percent_count(std::size_t n);

MetricValue psnr(const LumaPlane& a, const LumaPlane& b,
                 const MetricOptions& opt = {});

struct Psnr99Result {
  MetricValue value;
  ErrorMap map;
};

// PSNR of the mean of the k = ceil(N/100) largest squared errors. Ties at the
// selection boundary go to the lower row-major index.
Psnr99Result psnr99(const LumaPlane& hr, const LumaPlane& sr,
                    const MetricOptions& opt = {});

// PSNR between the even-cropped plane and its 2x box-down, bilinear-up round
// trip. Throws kDimensionTooSmall below 8x8.
MetricValue compute_hfi(const LumaPlane& lr);

// Grey background with selected pixels painted red.
RgbImage render_artifact_map(const ErrorMap& map, const LumaPlane& background);

}  // namespace srdiff

#endif  // SRDIFF_METRICS_HPP_
