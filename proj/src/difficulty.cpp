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

#include "srdiff/difficulty.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <string>

#include "srdiff/error.hpp"
#include "srdiff/metrics.hpp"

namespace srdiff {

std::string_view to_string(ContentLabel label) {
  return label == ContentLabel::kEdge ? "edge" : "texture";
}

ContentLabel parse_content_label(std::string_view text) {
  if (text == "edge") return ContentLabel::kEdge;
  if (text == "texture") return ContentLabel::kTexture;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown content label '" + std::string(text) + "'");
}

RotationSweep::RotationSweep() : angles_{0.0, 20.0, 40.0, 60.0, 80.0} {}

RotationSweep::RotationSweep(std::vector<double> angles) : angles_(std::move(angles)) {
  if (std::find(angles_.begin(), angles_.end(), 0.0) == angles_.end()) {
    throw Error(ErrorKind::kInvalidArgument, "rotation sweep must contain 0");
  }
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    if (!(angles_[i] >= 0.0 && angles_[i] < 90.0)) {
      throw Error(ErrorKind::kInvalidArgument, "sweep angles must lie in [0, 90)");
    }
    if (i > 0 && !(angles_[i] > angles_[i - 1])) {
      throw Error(ErrorKind::kInvalidArgument,
                  "sweep angles must be strictly increasing");
    }
  }
}

double edge_index_from_energy(const SubbandEnergy& e) {
  if (!(e.hh >= kDegenerateEnergy)) {
    throw Error(ErrorKind::kDegenerateContent,
                "HH subband energy below 1e-9; edge index undefined");
  }
  return (e.lh + e.hl) / e.hh;
}

double edge_index(const LumaPlane& p) {
  return edge_index_from_energy(subband_l1(dwt2(p)));
}

RieiResult compute_riei(const LumaPlane& p, const RotationSweep& sweep) {
  const auto& angles = sweep.angles();
  for (double theta : angles) {
    const Extent crop = inscribed_extent(p.width(), p.height(), theta);
    if (crop.width < kSym19Taps || crop.height < kSym19Taps) {
      throw Error(ErrorKind::kOutputTooSmall,
                  "crop at " + std::to_string(theta) + " deg is " +
                      std::to_string(crop.width) + "x" +
                      std::to_string(crop.height) + ", below 38x38");
    }
  }

  const auto n = static_cast<std::ptrdiff_t>(angles.size());
  std::vector<std::optional<double>> per_angle(angles.size());
  std::vector<std::exception_ptr> failure(angles.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      per_angle[i] = edge_index(rotate(p, angles[i]));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDegenerateContent) {
        failure[i] = std::current_exception();
      }
    } catch (...) {
      failure[i] = std::current_exception();
    }
  }
  for (const auto& f : failure) {
    if (f) std::rethrow_exception(f);
  }

  std::optional<RieiResult> best;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!per_angle[i]) continue;
    if (!best || *per_angle[i] > best->riei) best = RieiResult{*per_angle[i], angles[i]};
  }
  if (!best) {
    throw Error(ErrorKind::kDegenerateContent,
                "edge index degenerates at every sweep angle");
  }
  return *best;
}

ContentLabel classify_edge_texture(double riei, double threshold) {
  return riei > threshold ? ContentLabel::kEdge : ContentLabel::kTexture;
}

DifficultyScores score_plane(const LumaPlane& luma, std::string image_id,
                             const ScoreOptions& opt) {
  try {
    DifficultyScores s;
    const MetricValue hfi = compute_hfi(luma);
    s.hfi_db = hfi.db;
    s.hfi_capped = hfi.capped;
    s.ei = edge_index(luma);
    const RieiResult r = compute_riei(luma, opt.sweep);
    s.riei = r.riei;
    s.argmax_angle = r.argmax_angle;
    s.label = classify_edge_texture(s.riei, opt.threshold);
    s.image_id = std::move(image_id);
    return s;
  } catch (const Error& e) {
    throw Error(e.kind(), image_id + ": " + e.message());
  }
}

DifficultyScores score_image(const RgbImage& img, std::string image_id,
                             const ScoreOptions& opt) {
  return score_plane(rgb_to_luma(img, opt.luma), std::move(image_id), opt);
}

}  // namespace srdiff
