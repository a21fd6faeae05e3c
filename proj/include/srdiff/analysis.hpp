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

#ifndef SRDIFF_ANALYSIS_HPP_
#define SRDIFF_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srdiff {

enum class MetricColumn { kPsnr, kPsnr99, kHfi, kRiei };

std::string_view to_string(MetricColumn column);
MetricColumn parse_metric_column(std::string_view text);

// Cell of the HFI x RIEI grid. Level 0 holds the lowest values; a value tied
// with a cut point falls into the lower level. With the default 2x2 grid the
// cells are the four difficulty quadrants.
struct Cell {
  std::size_t hfi_level = 0;
  std::size_t riei_level = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct QuantileGrid {
  std::size_t hfi_levels = 2;
  std::size_t riei_levels = 2;
  std::size_t cell_count() const { return hfi_levels * riei_levels; }
  std::size_t index(const Cell& c) const { return c.hfi_level * riei_levels + c.riei_level; }
  friend bool operator==(const QuantileGrid&, const QuantileGrid&) = default;
};

enum class Quadrant { kEasyTexture, kEasyEdge, kHardTexture, kHardEdge };

std::string_view to_string(Quadrant q);
// Only defined on the 2x2 grid: easy = upper HFI level, edge = upper RIEI level.
Quadrant quadrant_of(const Cell& c);
Cell cell_of(Quadrant q);

// "easy_texture" etc. on the 2x2 grid, "h<i>_r<j>" otherwise.
std::string cell_name(const Cell& c, const QuantileGrid& grid);
// Presentation order: Easy-Texture, Easy-Edge, Hard-Texture, Hard-Edge on the
// 2x2 grid; row-major by (hfi_level, riei_level) otherwise.
std::vector<Cell> cell_order(const QuantileGrid& grid);

struct EvalRecord {
  std::string image_id;
  double psnr_db = 0.0;
  bool psnr_capped = false;
  double psnr99_db = 0.0;
  bool psnr99_capped = false;
  double hfi_db = 0.0;
  double riei = 0.0;
  std::optional<Cell> cell;  // set by partition_quadrants

  double value(MetricColumn column) const;
};

// Sample quantile with linear interpolation between order statistics;
// q = 0.5 gives the median (mean of the middle pair on even counts).
double quantile(std::span<const double> values, double q);
double median(std::span<const double> values);

struct Partition {
  std::vector<EvalRecord> records;  // sorted by image_id
  QuantileGrid grid;
  double hfi_median = 0.0;
  double riei_median = 0.0;
  std::vector<double> hfi_cuts;
  std::vector<double> riei_cuts;
};

// Assigns cells from per-axis quantile cuts computed over the records.
// Throws kTooFewRecords below 4 records.
Partition partition_quadrants(std::vector<EvalRecord> records,
                              const QuantileGrid& grid = {});

// Reuses the cuts and cells of reference for another record set covering the
// same ids (e.g. a second model on the same images). Throws kIdMismatch.
Partition apply_partition(const Partition& reference, std::vector<EvalRecord> records);

struct CellStats {
  std::size_t count = 0;
  std::vector<std::optional<double>> means;  // one per column, empty when count == 0
};

struct QuadrantReport {
  QuantileGrid grid;
  double hfi_median = 0.0;
  double riei_median = 0.0;
  std::vector<MetricColumn> columns;
  std::vector<CellStats> cells;  // indexed by QuantileGrid::index
  CellStats global;
};

// Throws kUnpartitioned if any record lacks a cell.
QuadrantReport quadrant_report(const Partition& partition,
                               const std::vector<MetricColumn>& columns);

struct Histogram {
  double bin_width = 0.5;
  std::vector<double> bin_edges;  // bins + 1 entries, multiples of bin_width
  std::vector<std::size_t> counts;
};

// Bins anchored at 0: value v lands in [floor(v/w)*w, (floor(v/w)+1)*w).
Histogram make_histogram(std::span<const double> values, double bin_width);

struct PairedDifference {
  std::string image_id;
  Cell cell;
  std::vector<double> diffs;  // A - B, one per column
};

struct Outlier {
  std::string image_id;
  double psnr_diff;
};

struct CompareOptions {
  std::vector<MetricColumn> columns{MetricColumn::kPsnr, MetricColumn::kPsnr99};
  double bin_width = 0.5;
  double outlier_cutoff = 4.0;
};

struct ComparisonReport {
  QuantileGrid grid;
  std::vector<MetricColumn> columns;
  std::vector<PairedDifference> differences;  // sorted by image_id
  std::vector<CellStats> cells;               // mean differences per cell
  CellStats global;
  Histogram histogram;                        // PSNR differences
  double outlier_cutoff = 4.0;
  std::vector<Outlier> outliers;              // |PSNR diff| > cutoff
};

// Both partitions must cover the same ids with the same cells; difficulty
// belongs to the content, so one partition serves both models. Throws
// kIdMismatch otherwise.
ComparisonReport compare_models(const Partition& a, const Partition& b,
                                const CompareOptions& opt = {});

struct Correlation {
  double pearson;
  double spearman;
};

// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> average_ranks(std::span<const double> values);

// Throws kLengthMismatch for unequal or < 3 lengths and kZeroVariance for a
// constant input.
Correlation correlations(std::span<const double> x, std::span<const double> y);

}  // namespace srdiff

#endif  // SRDIFF_ANALYSIS_HPP_
