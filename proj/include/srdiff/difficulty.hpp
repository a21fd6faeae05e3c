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

#ifndef SRDIFF_DIFFICULTY_HPP_
#define SRDIFF_DIFFICULTY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "srdiff/image.hpp"
#include "srdiff/imgproc.hpp"
#include "srdiff/wavelet.hpp"

namespace srdiff {

inline constexpr double kDefaultEdgeThreshold = 5.14;
inline constexpr double kDegenerateEnergy = 1e-9;

enum class ContentLabel { kTexture, kEdge };

std::string_view to_string(ContentLabel label);
ContentLabel parse_content_label(std::string_view text);

// Angles in degrees, strictly increasing, within [0, 90), containing 0.
class RotationSweep {
 public:
  RotationSweep();  // 0, 20, 40, 60, 80
  // Throws kInvalidArgument when the invariants do not hold.
  explicit RotationSweep(std::vector<double> angles);

  const std::vector<double>& angles() const noexcept { return angles_; }

 private:
  std::vector<double> angles_;
};

struct DifficultyScores {
  std::string image_id;
  double hfi_db = 0.0;
  bool hfi_capped = false;
  double ei = 0.0;
  double riei = 0.0;
  double argmax_angle = 0.0;
  ContentLabel label = ContentLabel::kTexture;
};

// (e_lh + e_hl) / e_hh. Throws kDegenerateContent when e_hh < 1e-9.
double edge_index_from_energy(const SubbandEnergy& e);

// Edge index of the sym19 detail subbands. Throws kInputSmallerThanFilter or
// kDegenerateContent.
double edge_index(const LumaPlane& p);

struct RieiResult {
  double riei;
  double argmax_angle;
};

// Maximum edge index over the sweep; the first listed angle wins ties and
// angles whose content degenerates are skipped. Throws kOutputTooSmall when
// a crop falls under 38 px per side and kDegenerateContent when every angle
// degenerates.
RieiResult compute_riei(const LumaPlane& p, const RotationSweep& sweep = {});

// Edge only when riei is strictly above the threshold.
ContentLabel classify_edge_texture(double riei,
                                   double threshold = kDefaultEdgeThreshold);

struct ScoreOptions {
  LumaConvention luma = LumaConvention::kStudio;
  RotationSweep sweep;
  double threshold = kDefaultEdgeThreshold;
};

// HFI, EI, RIEI and label from one image. Errors carry the image id.
DifficultyScores score_plane(const LumaPlane& luma, std::string image_id,
                             const ScoreOptions& opt = {});
DifficultyScores score_image(const RgbImage& img, std::string image_id,
                             const ScoreOptions& opt = {});

}  // namespace srdiff

#endif  // SRDIFF_DIFFICULTY_HPP_
