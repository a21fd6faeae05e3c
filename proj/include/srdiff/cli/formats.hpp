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

#ifndef SRDIFF_CLI_FORMATS_HPP_
#define SRDIFF_CLI_FORMATS_HPP_

// On-disk interchange: the score CSV and the eval / comparison / summary JSON
// documents. Decibel values carry 4 decimals and ratios 3; JSON keys keep
// insertion order.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "srdiff/analysis.hpp"
#include "srdiff/cli/commands.hpp"
#include "srdiff/difficulty.hpp"

namespace srdiff::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kDbDecimals = 4;
inline constexpr int kIndexDecimals = 3;
inline constexpr int kAngleDecimals = 1;

std::string format_fixed(double v, int decimals);
// Value as it reads back after format_fixed.
double round_to(double v, int decimals);

inline constexpr const char* kScoreCsvHeader = "image_id,hfi_db,ei,riei,argmax_angle,label";

// Rounds scores to their serialized precision and relabels from the rounded
// RIEI, so recomputed and CSV-loaded scores are identical.
DifficultyScores canonicalize(DifficultyScores s, double threshold);

void write_score_csv(std::ostream& os, const std::vector<DifficultyScores>& rows);
// Throws Error(kDecode) on a malformed file.
std::vector<DifficultyScores> read_score_csv(std::istream& is);

Json config_json(const RunConfig& config);

Json eval_json(const RunConfig& config, const std::string& lr_source,
               const Partition& partition, const QuadrantReport& report,
               const Json& errors);
// Records (without cells) from an eval document. Throws Error(kDecode).
std::vector<EvalRecord> records_from_eval_json(const Json& doc);

Json comparison_json(const RunConfig& config, const ComparisonReport& report);

void write_json(const std::filesystem::path& path, const Json& doc);
Json read_json(const std::filesystem::path& path);

}  // namespace srdiff::cli

#endif  // SRDIFF_CLI_FORMATS_HPP_
