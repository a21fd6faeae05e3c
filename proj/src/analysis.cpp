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

#include "srdiff/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "srdiff/error.hpp"

namespace srdiff {

std::string_view to_string(MetricColumn column) {
  switch (column) {
    case MetricColumn::kPsnr: return "psnr";
    case MetricColumn::kPsnr99: return "psnr99";
    case MetricColumn::kHfi: return "hfi";
    case MetricColumn::kRiei: return "riei";
  }
  return "unknown";
}

MetricColumn parse_metric_column(std::string_view text) {
  for (auto c : {MetricColumn::kPsnr, MetricColumn::kPsnr99, MetricColumn::kHfi,
                 MetricColumn::kRiei}) {
    if (text == to_string(c)) return c;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown metric column '" + std::string(text) + "'");
}

std::string_view to_string(Quadrant q) {
  switch (q) {
    case Quadrant::kEasyTexture: return "easy_texture";
    case Quadrant::kEasyEdge: return "easy_edge";
    case Quadrant::kHardTexture: return "hard_texture";
    case Quadrant::kHardEdge: return "hard_edge";
  }
  return "unknown";
}

Quadrant quadrant_of(const Cell& c) {
  const bool easy = c.hfi_level > 0;
  const bool edge = c.riei_level > 0;
  if (easy) return edge ? Quadrant::kEasyEdge : Quadrant::kEasyTexture;
  return edge ? Quadrant::kHardEdge : Quadrant::kHardTexture;
}

Cell cell_of(Quadrant q) {
  switch (q) {
    case Quadrant::kEasyTexture: return {1, 0};
    case Quadrant::kEasyEdge: return {1, 1};
    case Quadrant::kHardTexture: return {0, 0};
    case Quadrant::kHardEdge: return {0, 1};
  }
  return {};
}

namespace {

bool is_quadrant_grid(const QuantileGrid& g) {
  return g.hfi_levels == 2 && g.riei_levels == 2;
}

std::vector<std::size_t> id_order(const std::vector<EvalRecord>& records) {
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return records[i].image_id < records[j].image_id;
  });
  return order;
}

std::vector<double> cut_points(std::span<const double> values, std::size_t levels) {
  std::vector<double> cuts;
  for (std::size_t j = 1; j < levels; ++j) {
    cuts.push_back(quantile(values, static_cast<double>(j) / static_cast<double>(levels)));
  }
  return cuts;
}

std::size_t level_of(double v, const std::vector<double>& cuts) {
  return static_cast<std::size_t>(
      std::count_if(cuts.begin(), cuts.end(), [v](double c) { return v > c; }));
}

// Accumulates per-cell and global sums in the order rows are added.
class CellAccumulator {
 public:
  CellAccumulator(const QuantileGrid& grid, std::size_t columns)
      : sums_(grid.cell_count(), std::vector<double>(columns, 0.0)),
        counts_(grid.cell_count(), 0),
        global_sums_(columns, 0.0),
        grid_(grid) {}

  void add(const Cell& cell, std::span<const double> row) {
    const std::size_t i = grid_.index(cell);
    ++counts_[i];
    ++global_count_;
    for (std::size_t c = 0; c < row.size(); ++c) {
      sums_[i][c] += row[c];
      global_sums_[c] += row[c];
    }
  }

  std::vector<CellStats> cells() const {
    std::vector<CellStats> out(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) out[i] = stats(counts_[i], sums_[i]);
    return out;
  }
  CellStats global() const { return stats(global_count_, global_sums_); }

 private:
  static CellStats stats(std::size_t count, const std::vector<double>& sums) {
    CellStats s;
    s.count = count;
    if (count == 0) return s;
    for (double v : sums) s.means.emplace_back(v / static_cast<double>(count));
    return s;
  }

  std::vector<std::vector<double>> sums_;
  std::vector<std::size_t> counts_;
  std::vector<double> global_sums_;
  std::size_t global_count_ = 0;
  QuantileGrid grid_;
};

}  // namespace

std::string cell_name(const Cell& c, const QuantileGrid& grid) {
  if (is_quadrant_grid(grid)) return std::string(to_string(quadrant_of(c)));
  return "h" + std::to_string(c.hfi_level) + "_r" + std::to_string(c.riei_level);
}

std::vector<Cell> cell_order(const QuantileGrid& grid) {
  if (is_quadrant_grid(grid)) {
    return {cell_of(Quadrant::kEasyTexture), cell_of(Quadrant::kEasyEdge),
            cell_of(Quadrant::kHardTexture), cell_of(Quadrant::kHardEdge)};
  }
  std::vector<Cell> order;
  for (std::size_t h = 0; h < grid.hfi_levels; ++h) {
    for (std::size_t r = 0; r < grid.riei_levels; ++r) order.push_back({h, r});
  }
  return order;
}

double EvalRecord::value(MetricColumn column) const {
  switch (column) {
    case MetricColumn::kPsnr: return psnr_db;
    case MetricColumn::kPsnr99: return psnr99_db;
    case MetricColumn::kHfi: return hfi_db;
    case MetricColumn::kRiei: return riei;
  }
  return 0.0;
}

double quantile(std::span<const double> values, double q) {
  if (values.empty()) {
    throw Error(ErrorKind::kTooFewRecords, "quantile of an empty sample");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0) return sorted[lo];
  if (frac == 0.5) return 0.5 * (sorted[lo] + sorted[hi]);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double median(std::span<const double> values) { return quantile(values, 0.5); }

Partition partition_quadrants(std::vector<EvalRecord> records,
                              const QuantileGrid& grid) {
  if (records.size() < 4) {
    throw Error(ErrorKind::kTooFewRecords,
                "quadrant partition needs at least 4 records, got " +
                    std::to_string(records.size()));
  }
  if (grid.hfi_levels < 1 || grid.riei_levels < 1) {
    throw Error(ErrorKind::kInvalidArgument, "quantile grid needs >= 1 level per axis");
  }
  std::sort(records.begin(), records.end(),
            [](const EvalRecord& a, const EvalRecord& b) { return a.image_id < b.image_id; });

  std::vector<double> hfi;
  std::vector<double> riei;
  for (const auto& r : records) {
    hfi.push_back(r.hfi_db);
    riei.push_back(r.riei);
  }
  Partition p;
  p.grid = grid;
  p.hfi_median = median(hfi);
  p.riei_median = median(riei);
  p.hfi_cuts = cut_points(hfi, grid.hfi_levels);
  p.riei_cuts = cut_points(riei, grid.riei_levels);
  for (auto& r : records) {
    r.cell = Cell{level_of(r.hfi_db, p.hfi_cuts), level_of(r.riei, p.riei_cuts)};
  }
  p.records = std::move(records);
  return p;
}

Partition apply_partition(const Partition& reference,
                          std::vector<EvalRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const EvalRecord& a, const EvalRecord& b) { return a.image_id < b.image_id; });
  if (records.size() != reference.records.size()) {
    throw Error(ErrorKind::kIdMismatch,
                std::to_string(records.size()) + " records vs " +
                    std::to_string(reference.records.size()) + " in the reference");
  }
  const auto ref_order = id_order(reference.records);
  Partition p = reference;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const EvalRecord& ref = reference.records[ref_order[i]];
    if (records[i].image_id != ref.image_id) {
      throw Error(ErrorKind::kIdMismatch,
                  "image sets differ at '" + records[i].image_id + "' / '" +
                      ref.image_id + "'");
    }
    records[i].cell = ref.cell;
  }
  p.records = std::move(records);
  return p;
}

QuadrantReport quadrant_report(const Partition& partition,
                               const std::vector<MetricColumn>& columns) {
  QuadrantReport report;
  report.grid = partition.grid;
  report.hfi_median = partition.hfi_median;
  report.riei_median = partition.riei_median;
  report.columns = columns;

  CellAccumulator acc(partition.grid, columns.size());
  std::vector<double> row(columns.size());
  for (std::size_t i : id_order(partition.records)) {
    const EvalRecord& r = partition.records[i];
    if (!r.cell) {
      throw Error(ErrorKind::kUnpartitioned, r.image_id + " has no quadrant");
    }
    for (std::size_t c = 0; c < columns.size(); ++c) row[c] = r.value(columns[c]);
    acc.add(*r.cell, row);
  }
  report.cells = acc.cells();
  report.global = acc.global();
  return report;
}

Histogram make_histogram(std::span<const double> values, double bin_width) {
  if (!(bin_width > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "histogram bin width must be positive");
  }
  Histogram h;
  h.bin_width = bin_width;
  if (values.empty()) return h;
  std::vector<long long> bins;
  bins.reserve(values.size());
  for (double v : values) bins.push_back(static_cast<long long>(std::floor(v / bin_width)));
  const auto [lo, hi] = std::minmax_element(bins.begin(), bins.end());
  const long long first = *lo;
  const auto n_bins = static_cast<std::size_t>(*hi - first + 1);
  h.counts.assign(n_bins, 0);
  for (long long b : bins) ++h.counts[static_cast<std::size_t>(b - first)];
  for (std::size_t i = 0; i <= n_bins; ++i) {
    h.bin_edges.push_back(static_cast<double>(first + static_cast<long long>(i)) * bin_width);
  }
  return h;
}

ComparisonReport compare_models(const Partition& a, const Partition& b,
                                const CompareOptions& opt) {
  if (!(a.grid == b.grid)) {
    throw Error(ErrorKind::kIdMismatch, "partitions use different grids");
  }
  if (a.records.size() != b.records.size()) {
    throw Error(ErrorKind::kIdMismatch,
                std::to_string(a.records.size()) + " vs " +
                    std::to_string(b.records.size()) + " records");
  }
  const auto order_a = id_order(a.records);
  const auto order_b = id_order(b.records);

  ComparisonReport report;
  report.grid = a.grid;
  report.columns = opt.columns;
  report.outlier_cutoff = opt.outlier_cutoff;

  CellAccumulator acc(a.grid, opt.columns.size());
  std::vector<double> psnr_diffs;
  for (std::size_t i = 0; i < order_a.size(); ++i) {
    const EvalRecord& ra = a.records[order_a[i]];
    const EvalRecord& rb = b.records[order_b[i]];
    if (ra.image_id != rb.image_id) {
      throw Error(ErrorKind::kIdMismatch,
                  "image sets differ at '" + ra.image_id + "' / '" + rb.image_id + "'");
    }
    if (!ra.cell || !rb.cell) {
      throw Error(ErrorKind::kUnpartitioned, ra.image_id + " has no quadrant");
    }
    if (!(*ra.cell == *rb.cell)) {
      throw Error(ErrorKind::kIdMismatch,
                  ra.image_id + " sits in different cells for the two models");
    }
    PairedDifference d{ra.image_id, *ra.cell, {}};
    for (MetricColumn c : opt.columns) d.diffs.push_back(ra.value(c) - rb.value(c));
    acc.add(d.cell, d.diffs);

    const double psnr_diff = ra.psnr_db - rb.psnr_db;
    psnr_diffs.push_back(psnr_diff);
    if (std::fabs(psnr_diff) > opt.outlier_cutoff) {
      report.outliers.push_back({ra.image_id, psnr_diff});
    }
    report.differences.push_back(std::move(d));
  }
  report.cells = acc.cells();
  report.global = acc.global();
  report.histogram = make_histogram(psnr_diffs, opt.bin_width);
  return report;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(values.size());
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && values[order[end]] == values[order[start]]) ++end;
    // Ranks start..end-1 (0-based) share their mean, 1-based.
    const double rank = 0.5 * static_cast<double>(start + end - 1) + 1.0;
    for (std::size_t t = start; t < end; ++t) ranks[order[t]] = rank;
    start = end;
  }
  return ranks;
}

namespace {

double pearson(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

bool is_constant(std::span<const double> v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *lo == *hi;
}

}  // namespace

Correlation correlations(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3) {
    throw Error(ErrorKind::kLengthMismatch,
                "correlation needs two samples of equal length >= 3, got " +
                    std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  if (is_constant(x) || is_constant(y)) {
    throw Error(ErrorKind::kZeroVariance, "correlation of a constant sample");
  }
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return {pearson(x, y), pearson(rx, ry)};
}

}  // namespace srdiff
