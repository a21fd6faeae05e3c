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

#ifndef SRDIFF_IMGPROC_HPP_
#define SRDIFF_IMGPROC_HPP_

#include <cstddef>

#include "srdiff/image.hpp"

namespace srdiff {

enum class LumaConvention {
  kStudio,  // BT.601, Y in [16, 235]
  kFull,    // BT.601, Y in [0, 255]
};

LumaPlane rgb_to_luma(const RgbImage& img,
                      LumaConvention convention = LumaConvention::kStudio);

// Mean of each 2x2 block; a trailing odd row/column is dropped.
// Throws kDimensionTooSmall below 8x8.
LumaPlane downsample2(const LumaPlane& p);

// Align-corners-false bilinear interpolation up to target_w x target_h.
// Throws kDimensionTooSmall if the target is smaller than the source.
LumaPlane bilinear_upsample2(const LumaPlane& p, std::size_t target_w,
                             std::size_t target_h);

struct Extent {
  std::size_t width;
  std::size_t height;
};

// Largest axis-aligned rectangle inside a w x h rectangle rotated by
// theta_deg, floored to whole pixels.
Extent inscribed_extent(std::size_t w, std::size_t h, double theta_deg);

// Rotation about the image centre followed by the inscribed-rectangle crop.
// theta_deg must lie in [0, 90); 0 returns the input unchanged.
// Throws kInvalidArgument for an out-of-range angle and kOutputTooSmall when
// the crop is below 8x8.
LumaPlane rotate(const LumaPlane& p, double theta_deg);

// Antialiased bicubic reduction by an integer factor (Keys kernel, a = -0.5,
// support widened by the factor). Used to synthesise LR planes from HR.
LumaPlane bicubic_downsample(const LumaPlane& p, std::size_t factor);

}  // namespace srdiff

#endif  // SRDIFF_IMGPROC_HPP_
