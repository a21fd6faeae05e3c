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

#include "srdiff/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <omp.h>

#include "srdiff/cli/formats.hpp"
#include "srdiff/error.hpp"
#include "srdiff/metrics.hpp"
#include "srdiff/png_io.hpp"

namespace srdiff::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kMaxUnpairedFraction = 0.10;
constexpr std::size_t kSyntheticLrFactor = 4;

// Raised when an output fails a structural invariant (exit status 3).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int worker_count(const RunConfig& config) {
  return config.jobs > 0 ? config.jobs : omp_get_max_threads();
}

// Runs fn(i) for i in [0, n) on the configured pool. Per-item exceptions are
// the caller's business; fn must not throw.
template <typename Fn>
void for_each_item(std::size_t n, const RunConfig& config, Fn&& fn) {
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count(config))
  for (std::ptrdiff_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

struct ItemError {
  std::string image_id;
  std::string kind;
  std::string message;
};

ItemError describe(const std::string& id, std::exception_ptr ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const Error& e) {
    return {id, std::string(to_string(e.kind())), e.message()};
  } catch (const std::exception& e) {
    return {id, "internal", e.what()};
  }
}

Json errors_json(std::vector<ItemError> errors) {
  std::sort(errors.begin(), errors.end(),
            [](const ItemError& a, const ItemError& b) { return a.image_id < b.image_id; });
  Json out = Json::array();
  for (const auto& e : errors) {
    out.push_back({{"image_id", e.image_id}, {"kind", e.kind}, {"message", e.message}});
  }
  return out;
}

Json stats_json(const std::vector<const DifficultyScores*>& rows) {
  std::vector<double> hfi;
  std::vector<double> riei;
  double hfi_sum = 0.0;
  double riei_sum = 0.0;
  for (const auto* r : rows) {
    hfi.push_back(r->hfi_db);
    riei.push_back(r->riei);
    hfi_sum += r->hfi_db;
    riei_sum += r->riei;
  }
  const auto n = static_cast<double>(rows.size());
  Json j;
  j["count"] = rows.size();
  j["hfi_mean"] = round_to(hfi_sum / n, kDbDecimals);
  j["hfi_median"] = round_to(median(hfi), kDbDecimals);
  j["riei_mean"] = round_to(riei_sum / n, kIndexDecimals);
  j["riei_median"] = round_to(median(riei), kIndexDecimals);
  return j;
}

ScoreOptions score_options(const RunConfig& config) {
  return {config.luma, config.sweep, config.threshold};
}

void check_scores(const DifficultyScores& s, double threshold) {
  if (!(s.riei >= s.ei) || (s.label == ContentLabel::kEdge) != (s.riei > threshold)) {
    throw InvariantViolation(s.image_id + ": difficulty scores violate riei >= ei or the label rule");
  }
}

void check_report(const QuadrantReport& report) {
  std::size_t total = 0;
  for (const auto& c : report.cells) total += c.count;
  if (total != report.global.count) {
    throw InvariantViolation("quadrant counts do not sum to the global count");
  }
  for (std::size_t col = 0; col < report.columns.size() && report.global.count > 0; ++col) {
    double weighted = 0.0;
    for (const auto& c : report.cells) {
      if (c.count > 0) weighted += static_cast<double>(c.count) * *c.means[col];
    }
    weighted /= static_cast<double>(total);
    const double global = *report.global.means[col];
    if (std::fabs(weighted - global) > 1e-9 * std::max(1.0, std::fabs(global))) {
      throw InvariantViolation("weighted quadrant means do not reconstruct the global mean");
    }
  }
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  return os;
}

LumaPlane load_luma(const fs::path& path, LumaConvention luma) {
  return rgb_to_luma(read_png(path), luma);
}

template <typename Fn>
int guarded(std::ostream& log, Fn&& fn) {
  try {
    return fn();
  } catch (const InvariantViolation& e) {
    log << "error: invariant violation: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

struct DifficultySource {
  std::string name;  // "directory", "scores" or "synthetic"
  std::map<std::string, DifficultyScores> scores;
};

}  // namespace

DatasetManifest DatasetManifest::discover(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorKind::kIo, root.string() + " is not a directory");
  }
  DatasetManifest m;
  m.root = root;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext != ".png") continue;
    const fs::path rel = fs::relative(entry.path(), root);
    fs::path stem = rel;
    stem.replace_extension();
    m.entries.push_back({stem.generic_string(), rel});
  }
  std::sort(m.entries.begin(), m.entries.end(),
            [](const Entry& a, const Entry& b) { return a.image_id < b.image_id; });
  for (std::size_t i = 1; i < m.entries.size(); ++i) {
    if (m.entries[i].image_id == m.entries[i - 1].image_id) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate image id '" + m.entries[i].image_id + "'");
    }
  }
  return m;
}

std::optional<fs::path> DatasetManifest::find(const std::string& image_id) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), image_id,
      [](const Entry& e, const std::string& id) { return e.image_id < id; });
  if (it == entries.end() || it->image_id != image_id) return std::nullopt;
  return root / it->relative_path;
}

std::string dataset_of(const std::string& image_id, const std::string& fallback) {
  const auto slash = image_id.find('/');
  return slash == std::string::npos ? fallback : image_id.substr(0, slash);
}

int cmd_score(const Paths& paths, const RunConfig& config, std::ostream& log) {
  return guarded(log, [&]() -> int {
    const DatasetManifest manifest = DatasetManifest::discover(paths.input);
    if (manifest.entries.empty()) {
      log << "error: no PNG images under " << paths.input << '\n';
      return kExitData;
    }
    const std::size_t n = manifest.entries.size();
    std::vector<std::optional<DifficultyScores>> scored(n);
    std::vector<std::exception_ptr> failed(n);
    const ScoreOptions opt = score_options(config);
    for_each_item(n, config, [&](std::size_t i) {
      const auto& e = manifest.entries[i];
      try {
        scored[i] = canonicalize(
            score_image(read_png(manifest.root / e.relative_path), e.image_id, opt),
            config.threshold);
      } catch (...) {
        failed[i] = std::current_exception();
      }
    });

    std::vector<DifficultyScores> rows;
    std::vector<ItemError> errors;
    for (std::size_t i = 0; i < n; ++i) {
      if (scored[i]) {
        check_scores(*scored[i], config.threshold);
        rows.push_back(std::move(*scored[i]));
      } else {
        errors.push_back(describe(manifest.entries[i].image_id, failed[i]));
        log << "warning: " << errors.back().image_id << ": " << errors.back().message << '\n';
      }
    }

    {
      std::ofstream csv = open_output(paths.out);
      write_score_csv(csv, rows);
      if (!csv) throw Error(ErrorKind::kIo, "write failed for " + paths.out.string());
    }

    const std::string fallback = paths.input.filename().empty()
                                     ? paths.input.parent_path().filename().string()
                                     : paths.input.filename().string();
    std::map<std::string, std::vector<const DifficultyScores*>> by_dataset;
    std::vector<const DifficultyScores*> all;
    for (const auto& r : rows) {
      by_dataset[dataset_of(r.image_id, fallback)].push_back(&r);
      all.push_back(&r);
    }
    Json summary;
    summary["config"] = config_json(config);
    summary["scored"] = rows.size();
    summary["failed"] = errors.size();
    summary["complete"] = errors.empty() && !rows.empty();
    Json datasets = Json::object();
    for (const auto& [name, members] : by_dataset) datasets[name] = stats_json(members);
    summary["datasets"] = std::move(datasets);
    summary["overall"] = rows.empty() ? Json(nullptr) : stats_json(all);
    summary["errors"] = errors_json(errors);

    fs::path summary_path = paths.summary;
    if (summary_path.empty()) {
      summary_path = paths.out;
      summary_path.replace_extension(".summary.json");
    }
    write_json(summary_path, summary);
    return rows.empty() ? kExitData : kExitOk;
  });
}

int cmd_eval(const Paths& paths, const RunConfig& config, std::ostream& log) {
  return guarded(log, [&]() -> int {
    const DatasetManifest hr = DatasetManifest::discover(paths.hr);
    const DatasetManifest sr = DatasetManifest::discover(paths.sr);

    DifficultySource difficulty;
    std::optional<DatasetManifest> lr;
    if (!paths.scores.empty()) {
      difficulty.name = "scores";
      std::ifstream is(paths.scores, std::ios::binary);
      if (!is) throw Error(ErrorKind::kIo, "cannot read " + paths.scores.string());
      for (auto& s : read_score_csv(is)) {
        std::string id = s.image_id;
        difficulty.scores.emplace(std::move(id), std::move(s));
      }
    } else if (!paths.lr.empty()) {
      difficulty.name = "directory";
      lr = DatasetManifest::discover(paths.lr);
    } else {
      difficulty.name = "synthetic";
    }

    std::set<std::string> all_ids;
    for (const auto& e : hr.entries) all_ids.insert(e.image_id);
    for (const auto& e : sr.entries) all_ids.insert(e.image_id);

    std::vector<std::string> paired;
    std::vector<ItemError> errors;
    for (const auto& id : all_ids) {
      std::string missing;
      if (!hr.find(id)) missing = "HR";
      else if (!sr.find(id)) missing = "SR";
      else if (difficulty.name == "scores" && !difficulty.scores.count(id)) missing = "score row";
      else if (lr && !lr->find(id)) missing = "LR";
      if (missing.empty()) {
        paired.push_back(id);
      } else {
        errors.push_back({id, "unpaired", "no " + missing + " counterpart"});
        log << "warning: " << id << ": no " << missing << " counterpart, skipped\n";
      }
    }

    const std::size_t n = paired.size();
    std::vector<std::optional<EvalRecord>> evaluated(n);
    std::vector<std::exception_ptr> failed(n);
    const ScoreOptions opt = score_options(config);
    const MetricOptions metric_opt{config.shave};
    for_each_item(n, config, [&](std::size_t i) {
      const std::string& id = paired[i];
      try {
        const LumaPlane hr_luma = load_luma(*hr.find(id), config.luma);
        const LumaPlane sr_luma = load_luma(*sr.find(id), config.luma);
        DifficultyScores s;
        if (difficulty.name == "scores") {
          s = difficulty.scores.at(id);
        } else {
          const LumaPlane lr_luma = lr ? load_luma(*lr->find(id), config.luma)
                                       : bicubic_downsample(hr_luma, kSyntheticLrFactor);
          s = canonicalize(score_plane(lr_luma, id, opt), config.threshold);
        }
        EvalRecord r;
        r.image_id = id;
        const MetricValue p = psnr(hr_luma, sr_luma, metric_opt);
        const MetricValue p99 = psnr99(hr_luma, sr_luma, metric_opt).value;
        r.psnr_db = p.db;
        r.psnr_capped = p.capped;
        r.psnr99_db = p99.db;
        r.psnr99_capped = p99.capped;
        r.hfi_db = s.hfi_db;
        r.riei = s.riei;
        evaluated[i] = std::move(r);
      } catch (...) {
        failed[i] = std::current_exception();
      }
    });

    std::vector<EvalRecord> records;
    for (std::size_t i = 0; i < n; ++i) {
      if (evaluated[i]) {
        records.push_back(std::move(*evaluated[i]));
      } else {
        errors.push_back(describe(paired[i], failed[i]));
        log << "warning: " << paired[i] << ": " << errors.back().message << '\n';
      }
    }

    const Partition partition = partition_quadrants(std::move(records), config.grid);
    const QuadrantReport report =
        quadrant_report(partition, {MetricColumn::kPsnr, MetricColumn::kPsnr99});
    check_report(report);
    write_json(paths.out,
               eval_json(config, difficulty.name, partition, report, errors_json(errors)));

    const double skipped = static_cast<double>(errors.size());
    const double total = static_cast<double>(std::max<std::size_t>(all_ids.size(), 1));
    if (skipped / total > kMaxUnpairedFraction) {
      log << "error: " << errors.size() << " of " << all_ids.size()
          << " images were unpaired or failed\n";
      return kExitData;
    }
    return kExitOk;
  });
}

int cmd_compare(const Paths& paths, const RunConfig& config, std::ostream& log) {
  return guarded(log, [&]() -> int {
    const auto a = records_from_eval_json(read_json(paths.eval_a));
    const auto b = records_from_eval_json(read_json(paths.eval_b));
    // Difficulty comes from the first model's records; the second reuses it.
    const Partition pa = partition_quadrants(a, config.grid);
    const Partition pb = apply_partition(pa, b);
    CompareOptions opt;
    opt.bin_width = config.bin_width;
    opt.outlier_cutoff = config.outlier_cutoff;
    const ComparisonReport report = compare_models(pa, pb, opt);
    std::size_t total = 0;
    for (auto c : report.histogram.counts) total += c;
    if (total != report.differences.size()) {
      throw InvariantViolation("histogram counts do not sum to the pair count");
    }
    write_json(paths.out, comparison_json(config, report));
    return kExitOk;
  });
}

int cmd_artifact_map(const Paths& paths, const RunConfig& config, std::ostream& out,
                     std::ostream& log) {
  return guarded(log, [&]() -> int {
    const LumaPlane hr = load_luma(paths.hr, config.luma);
    const LumaPlane sr = load_luma(paths.sr, config.luma);
    const MetricOptions metric_opt{config.shave};
    const MetricValue p = psnr(hr, sr, metric_opt);
    const Psnr99Result p99 = psnr99(hr, sr, metric_opt);

    LumaPlane background(p99.map.width, p99.map.height);
    for (std::size_t y = 0; y < background.height(); ++y) {
      for (std::size_t x = 0; x < background.width(); ++x) {
        background(x, y) = hr(x + config.shave, y + config.shave);
      }
    }
    write_png(paths.out, render_artifact_map(p99.map, background));

    const auto line = [&](const char* name, const MetricValue& v) {
      out << name << ' ' << format_fixed(v.db, 2) << (v.capped ? " capped" : "") << '\n';
    };
    line("psnr", p);
    line("psnr99", p99.value);
    return kExitOk;
  });
}

}  // namespace srdiff::cli
