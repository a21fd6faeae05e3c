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

#include "srdiff/cli/formats.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "srdiff/error.hpp"

namespace srdiff::cli {

namespace {

// CSV field quoting per RFC 4180, only when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

double parse_number(const std::string& text, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kDecode,
              "score CSV line " + std::to_string(line_no) + ": bad number '" + text + "'");
}

double db(double v) { return round_to(v, kDbDecimals); }
double index_value(double v) { return round_to(v, kIndexDecimals); }

double column_value(MetricColumn c, double v) {
  return c == MetricColumn::kRiei ? index_value(v) : db(v);
}

Json cell_json(const CellStats& s, const std::vector<MetricColumn>& columns,
               const char* means_key) {
  Json j;
  j["count"] = s.count;
  if (s.count > 0) {
    Json means = Json::object();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      means[std::string(to_string(columns[c]))] = column_value(columns[c], *s.means[c]);
    }
    j[means_key] = std::move(means);
  }
  return j;
}

}  // namespace

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  // Collapse "-0.000" to "0.000".
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

double round_to(double v, int decimals) {
  return std::stod(format_fixed(v, decimals)) + 0.0;
}

DifficultyScores canonicalize(DifficultyScores s, double threshold) {
  s.hfi_db = round_to(s.hfi_db, kDbDecimals);
  s.ei = round_to(s.ei, kIndexDecimals);
  s.riei = round_to(s.riei, kIndexDecimals);
  s.argmax_angle = round_to(s.argmax_angle, kAngleDecimals);
  s.label = classify_edge_texture(s.riei, threshold);
  return s;
}

void write_score_csv(std::ostream& os, const std::vector<DifficultyScores>& rows) {
  os << kScoreCsvHeader << '\n';
  for (const auto& r : rows) {
    os << csv_field(r.image_id) << ',' << format_fixed(r.hfi_db, kDbDecimals) << ','
       << format_fixed(r.ei, kIndexDecimals) << ','
       << format_fixed(r.riei, kIndexDecimals) << ','
       << format_fixed(r.argmax_angle, kAngleDecimals) << ',' << to_string(r.label)
       << '\n';
  }
}

std::vector<DifficultyScores> read_score_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw Error(ErrorKind::kDecode, "score CSV is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kScoreCsvHeader) {
    throw Error(ErrorKind::kDecode, "unexpected score CSV header '" + line + "'");
  }
  std::vector<DifficultyScores> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 6) {
      throw Error(ErrorKind::kDecode, "score CSV line " + std::to_string(line_no) +
                                          ": expected 6 fields");
    }
    DifficultyScores s;
    s.image_id = f[0];
    s.hfi_db = parse_number(f[1], line_no);
    s.hfi_capped = s.hfi_db == 100.0;
    s.ei = parse_number(f[2], line_no);
    s.riei = parse_number(f[3], line_no);
    s.argmax_angle = parse_number(f[4], line_no);
    try {
      s.label = parse_content_label(f[5]);
    } catch (const Error& e) {
      throw Error(ErrorKind::kDecode,
                  "score CSV line " + std::to_string(line_no) + ": " + e.message());
    }
    rows.push_back(std::move(s));
  }
  return rows;
}

Json config_json(const RunConfig& config) {
  Json j;
  j["luma"] = config.luma == LumaConvention::kStudio ? "studio" : "full";
  j["shave"] = config.shave;
  j["angles"] = config.sweep.angles();
  j["threshold"] = config.threshold;
  j["bin_width"] = config.bin_width;
  j["outlier_cutoff"] = config.outlier_cutoff;
  j["grid"] = {config.grid.hfi_levels, config.grid.riei_levels};
  return j;
}

Json eval_json(const RunConfig& config, const std::string& lr_source,
               const Partition& partition, const QuadrantReport& report,
               const Json& errors) {
  Json doc;
  Json cfg = config_json(config);
  cfg["lr_source"] = lr_source;
  doc["config"] = std::move(cfg);
  doc["medians"] = {{"hfi", db(report.hfi_median)},
                    {"riei", index_value(report.riei_median)}};
  Json records = Json::array();
  for (const auto& r : partition.records) {
    Json row;
    row["image_id"] = r.image_id;
    row["psnr_db"] = db(r.psnr_db);
    row["psnr_capped"] = r.psnr_capped;
    row["psnr99_db"] = db(r.psnr99_db);
    row["psnr99_capped"] = r.psnr99_capped;
    row["hfi_db"] = db(r.hfi_db);
    row["riei"] = index_value(r.riei);
    row["quadrant"] = r.cell ? cell_name(*r.cell, partition.grid) : "unassigned";
    records.push_back(std::move(row));
  }
  doc["records"] = std::move(records);
  Json quadrants = Json::object();
  for (const Cell& c : cell_order(report.grid)) {
    quadrants[cell_name(c, report.grid)] =
        cell_json(report.cells[report.grid.index(c)], report.columns, "means");
  }
  doc["quadrants"] = std::move(quadrants);
  doc["global"] = cell_json(report.global, report.columns, "means");
  doc["errors"] = errors;
  return doc;
}

std::vector<EvalRecord> records_from_eval_json(const Json& doc) {
  std::vector<EvalRecord> out;
  try {
    for (const auto& row : doc.at("records")) {
      EvalRecord r;
      r.image_id = row.at("image_id").get<std::string>();
      r.psnr_db = row.at("psnr_db").get<double>();
      r.psnr_capped = row.value("psnr_capped", false);
      r.psnr99_db = row.at("psnr99_db").get<double>();
      r.psnr99_capped = row.value("psnr99_capped", false);
      r.hfi_db = row.at("hfi_db").get<double>();
      r.riei = row.at("riei").get<double>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kDecode, std::string("eval JSON: ") + e.what());
  }
  return out;
}

Json comparison_json(const RunConfig& config, const ComparisonReport& report) {
  Json doc;
  doc["config"] = config_json(config);
  Json columns = Json::array();
  for (MetricColumn c : report.columns) columns.push_back(to_string(c));
  doc["columns"] = std::move(columns);
  Json quadrants = Json::object();
  for (const Cell& c : cell_order(report.grid)) {
    quadrants[cell_name(c, report.grid)] =
        cell_json(report.cells[report.grid.index(c)], report.columns, "mean_diff");
  }
  doc["quadrants"] = std::move(quadrants);
  doc["global"] = cell_json(report.global, report.columns, "mean_diff");
  Json edges = Json::array();
  for (double e : report.histogram.bin_edges) edges.push_back(db(e));
  doc["histogram"] = {{"metric", "psnr"},
                      {"bin_width", report.histogram.bin_width},
                      {"bin_edges", std::move(edges)},
                      {"counts", report.histogram.counts}};
  doc["outlier_cutoff"] = report.outlier_cutoff;
  Json outliers = Json::array();
  for (const auto& o : report.outliers) {
    outliers.push_back({{"image_id", o.image_id}, {"psnr_diff", db(o.psnr_diff)}});
  }
  doc["outliers"] = std::move(outliers);
  Json diffs = Json::array();
  for (const auto& d : report.differences) {
    Json row;
    row["image_id"] = d.image_id;
    row["quadrant"] = cell_name(d.cell, report.grid);
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      row[std::string(to_string(report.columns[c]))] =
          column_value(report.columns[c], d.diffs[c]);
    }
    diffs.push_back(std::move(row));
  }
  doc["differences"] = std::move(diffs);
  return doc;
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  os << doc.dump(2) << '\n';
  if (!os) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  try {
    return Json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kDecode, path.string() + ": " + e.what());
  }
}

}  // namespace srdiff::cli
