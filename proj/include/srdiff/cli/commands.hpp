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

#ifndef SRDIFF_CLI_COMMANDS_HPP_
#define SRDIFF_CLI_COMMANDS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srdiff/analysis.hpp"
#include "srdiff/difficulty.hpp"
#include "srdiff/imgproc.hpp"

namespace srdiff::cli {

enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitInternal = 3,
};

struct RunConfig {
  LumaConvention luma = LumaConvention::kStudio;
  std::size_t shave = 0;
  RotationSweep sweep;
  double threshold = kDefaultEdgeThreshold;
  double bin_width = 0.5;
  double outlier_cutoff = 4.0;
  QuantileGrid grid;
  // 0 = all hardware threads. Never affects output bytes.
  int jobs = 0;
};

// Every *.png below root, keyed by relative path without the extension.
struct DatasetManifest {
  std::filesystem::path root;
  struct Entry {
    std::string image_id;
    std::filesystem::path relative_path;
  };
  std::vector<Entry> entries;  // sorted by image_id

  static DatasetManifest discover(const std::filesystem::path& root);
  std::optional<std::filesystem::path> find(const std::string& image_id) const;
};

// "<first path component>" for nested ids, otherwise fallback.
std::string dataset_of(const std::string& image_id, const std::string& fallback);

struct Paths {
  std::filesystem::path input;
  std::filesystem::path hr;
  std::filesystem::path sr;
  std::filesystem::path lr;
  std::filesystem::path scores;
  std::filesystem::path out;
  std::filesystem::path summary;  // score: defaults to <out>.summary.json
  std::filesystem::path eval_a;
  std::filesystem::path eval_b;
};

int cmd_score(const Paths& paths, const RunConfig& config, std::ostream& log);
int cmd_eval(const Paths& paths, const RunConfig& config, std::ostream& log);
int cmd_compare(const Paths& paths, const RunConfig& config, std::ostream& log);
int cmd_artifact_map(const Paths& paths, const RunConfig& config,
                     std::ostream& out, std::ostream& log);

}  // namespace srdiff::cli

#endif  // SRDIFF_CLI_COMMANDS_HPP_
