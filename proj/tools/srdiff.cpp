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

// srdiff: difficulty-aware super-resolution evaluation.
//
//   srdiff score        --input DIR --out scores.csv
//   srdiff eval         --hr DIR --sr DIR [--lr DIR | --scores CSV] --out eval.json
//   srdiff compare      EVAL_A EVAL_B --out comparison.json
//   srdiff artifact-map --hr HR.png --sr SR.png --out map.png

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srdiff/cli/commands.hpp"
#include "srdiff/error.hpp"

namespace {

using srdiff::cli::Paths;
using srdiff::cli::RunConfig;

struct RawOptions {
  std::string luma = "studio";
  std::size_t shave = 0;
  std::string angles = "0,20,40,60,80";
  double threshold = srdiff::kDefaultEdgeThreshold;
  double bin_width = 0.5;
  double outlier_cutoff = 4.0;
  std::string grid = "2x2";
  int jobs = 0;
};

void add_config_options(CLI::App& app, RawOptions& raw) {
  app.add_option("--luma", raw.luma, "Y-channel convention")
      ->check(CLI::IsMember({"studio", "full"}))
      ->capture_default_str();
  app.add_option("--shave", raw.shave, "Border pixels ignored by PSNR/PSNR99")
      ->capture_default_str();
  app.add_option("--angles", raw.angles, "Rotation sweep in degrees, comma separated")
      ->capture_default_str();
  app.add_option("--threshold", raw.threshold, "RIEI above which an image is 'edge'")
      ->capture_default_str();
  app.add_option("--bin-width", raw.bin_width, "PSNR-difference histogram bin width (dB)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--outlier-cutoff", raw.outlier_cutoff, "Outlier |PSNR difference| (dB)")
      ->capture_default_str();
  app.add_option("--grid", raw.grid, "Quantile grid QHxQR over HFI and RIEI")
      ->capture_default_str();
  app.add_option("--jobs", raw.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

std::vector<double> parse_angles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad angle '" + item + "'");
  }
  return out;
}

srdiff::QuantileGrid parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw std::invalid_argument("grid must look like QHxQR");
  std::size_t used_h = 0;
  std::size_t used_r = 0;
  const std::string h = text.substr(0, x);
  const std::string r = text.substr(x + 1);
  const long qh = std::stol(h, &used_h);
  const long qr = std::stol(r, &used_r);
  if (used_h != h.size() || used_r != r.size() || qh < 1 || qr < 1) {
    throw std::invalid_argument("grid must look like QHxQR with positive counts");
  }
  return {static_cast<std::size_t>(qh), static_cast<std::size_t>(qr)};
}

RunConfig to_config(const RawOptions& raw) {
  RunConfig c;
  c.luma = raw.luma == "full" ? srdiff::LumaConvention::kFull
                              : srdiff::LumaConvention::kStudio;
  c.shave = raw.shave;
  c.sweep = srdiff::RotationSweep(parse_angles(raw.angles));
  c.threshold = raw.threshold;
  c.bin_width = raw.bin_width;
  c.outlier_cutoff = raw.outlier_cutoff;
  c.grid = parse_grid(raw.grid);
  c.jobs = raw.jobs;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difficulty-aware super-resolution evaluation"};
  app.require_subcommand(1);
  RawOptions raw;
  Paths paths;

  auto* score = app.add_subcommand("score", "Score LR images by HFI, EI and RIEI");
  score->add_option("--input", paths.input, "Directory of PNG images")->required();
  score->add_option("--out", paths.out, "Score CSV to write")->required();
  score->add_option("--summary", paths.summary,
                    "Summary JSON (default: <out>.summary.json)");
  add_config_options(*score, raw);

  auto* eval = app.add_subcommand("eval", "Evaluate SR outputs per difficulty quadrant");
  eval->add_option("--hr", paths.hr, "Ground-truth directory")->required();
  eval->add_option("--sr", paths.sr, "Super-resolved directory")->required();
  auto* lr_opt = eval->add_option("--lr", paths.lr, "LR directory for difficulty scores");
  auto* scores_opt = eval->add_option("--scores", paths.scores, "Precomputed score CSV");
  lr_opt->excludes(scores_opt);
  eval->add_option("--out", paths.out, "Eval JSON to write")->required();
  add_config_options(*eval, raw);

  auto* compare = app.add_subcommand("compare", "Compare two eval files (A - B)");
  compare->add_option("eval_a", paths.eval_a, "Eval JSON of model A")->required();
  compare->add_option("eval_b", paths.eval_b, "Eval JSON of model B")->required();
  compare->add_option("--out", paths.out, "Comparison JSON to write")->required();
  add_config_options(*compare, raw);

  auto* artifact = app.add_subcommand("artifact-map", "Render the PSNR99 artifact map");
  artifact->add_option("--hr", paths.hr, "Ground-truth PNG")->required();
  artifact->add_option("--sr", paths.sr, "Super-resolved PNG")->required();
  artifact->add_option("--out", paths.out, "Artifact-map PNG to write")->required();
  add_config_options(*artifact, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return srdiff::cli::kExitUsage;
  }

  RunConfig config;
  try {
    config = to_config(raw);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return srdiff::cli::kExitUsage;
  }

  if (*score) return srdiff::cli::cmd_score(paths, config, std::cerr);
  if (*eval) return srdiff::cli::cmd_eval(paths, config, std::cerr);
  if (*compare) return srdiff::cli::cmd_compare(paths, config, std::cerr);
  return srdiff::cli::cmd_artifact_map(paths, config, std::cout, std::cerr);
}
