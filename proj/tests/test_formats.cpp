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

#include <random>
#include <sstream>

#include "doctest.h"
#include "srdiff/cli/formats.hpp"
#include "srdiff/error.hpp"

using namespace srdiff;
using namespace srdiff::cli;

namespace {

DifficultyScores sample(std::string id, double hfi, double ei, double riei, double angle) {
  DifficultyScores s;
  s.image_id = std::move(id);
  s.hfi_db = hfi;
  s.ei = ei;
  s.riei = riei;
  s.argmax_angle = angle;
  s.label = classify_edge_texture(riei, kDefaultEdgeThreshold);
  return s;
}

ErrorKind kind_of_read(const std::string& text) {
  std::istringstream is(text);
  try {
    read_score_csv(is);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("format_fixed") {
  CHECK(format_fixed(1.23456, 4) == "1.2346");
  CHECK(format_fixed(100.0, 2) == "100.00");
  CHECK(format_fixed(-0.00001, 3) == "0.000");
  CHECK(format_fixed(-0.5, 1) == "-0.5");
  CHECK(round_to(5.14049, 3) == 5.14);
  CHECK(round_to(-1e-9, 4) == 0.0);
}

TEST_CASE("canonicalize relabels from the rounded index") {
  auto s = sample("x", 30.123456, 2.0004, 5.14049, 39.99);
  s.label = ContentLabel::kEdge;
  const auto c = canonicalize(s, kDefaultEdgeThreshold);
  CHECK(c.riei == 5.14);
  CHECK(c.label == ContentLabel::kTexture);
  CHECK(c.hfi_db == 30.1235);
  CHECK(c.argmax_angle == 40.0);
  CHECK(canonicalize(c, kDefaultEdgeThreshold).hfi_db == c.hfi_db);
}

TEST_CASE("score CSV round trip") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<DifficultyScores> rows;
  const char* ids[] = {"plain", "Set5/baby", "with,comma", "with \"quote\""};
  for (int i = 0; i < 40; ++i) {
    auto s = sample(std::string(ids[i % 4]) + std::to_string(i), 20 + 20 * u(rng),
                    0.5 + 4 * u(rng), 1 + 9 * u(rng), 20.0 * (i % 5));
    rows.push_back(canonicalize(s, kDefaultEdgeThreshold));
  }
  rows.push_back(canonicalize(sample("capped", 100.0, 1, 1, 0), kDefaultEdgeThreshold));
  std::stringstream ss;
  write_score_csv(ss, rows);
  CHECK(ss.str().rfind(std::string(kScoreCsvHeader) + "\n", 0) == 0);
  const auto back = read_score_csv(ss);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].image_id == rows[i].image_id);
    CHECK(back[i].hfi_db == rows[i].hfi_db);
    CHECK(back[i].ei == rows[i].ei);
    CHECK(back[i].riei == rows[i].riei);
    CHECK(back[i].argmax_angle == rows[i].argmax_angle);
    CHECK(back[i].label == rows[i].label);
  }
  CHECK(back.back().hfi_capped);
  std::stringstream again;
  write_score_csv(again, back);
  std::stringstream first;
  write_score_csv(first, rows);
  CHECK(again.str() == first.str());
}

TEST_CASE("malformed score CSV") {
  const std::string header = std::string(kScoreCsvHeader) + "\n";
  CHECK(kind_of_read("") == ErrorKind::kDecode);
  CHECK(kind_of_read("id,hfi\n") == ErrorKind::kDecode);
  CHECK(kind_of_read(header + "a,1,2,3\n") == ErrorKind::kDecode);
  CHECK(kind_of_read(header + "a,x,2,3,0,edge\n") == ErrorKind::kDecode);
  CHECK(kind_of_read(header + "a,1,2,3,0,smooth\n") == ErrorKind::kDecode);
  std::istringstream crlf(std::string(kScoreCsvHeader) + "\r\na,30,2,6,40,edge\r\n\r\n");
  const auto rows = read_score_csv(crlf);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].label == ContentLabel::kEdge);
}

TEST_CASE("JSON documents") {
  RunConfig config;
  std::vector<EvalRecord> records;
  for (int i = 0; i < 8; ++i) {
    EvalRecord r;
    r.image_id = "im" + std::to_string(i);
    r.psnr_db = 25.0 + i * 0.123456;
    r.psnr99_db = 15.0 + i;
    r.hfi_db = 30.0 + (i % 4);
    r.riei = 3.0 + (i / 4) * 4.0;
    records.push_back(r);
  }
  const auto part = partition_quadrants(records);
  const auto report = quadrant_report(part, {MetricColumn::kPsnr, MetricColumn::kPsnr99});
  const Json doc = eval_json(config, "synthetic", part, report, Json::array());

  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"config", "medians", "records", "quadrants",
                                         "global", "errors"});
  CHECK_FALSE(doc["config"].contains("jobs"));
  CHECK(doc["config"]["lr_source"] == "synthetic");
  CHECK(doc["records"][1]["psnr_db"].get<double>() == 25.1235);
  std::vector<std::string> quadrants;
  for (const auto& [k, v] : doc["quadrants"].items()) quadrants.push_back(k);
  CHECK(quadrants == std::vector<std::string>{"easy_texture", "easy_edge", "hard_texture",
                                              "hard_edge"});

  const auto back = records_from_eval_json(Json::parse(doc.dump()));
  REQUIRE(back.size() == records.size());
  CHECK(back[3].riei == 3.0);
  CHECK(back[7].psnr99_db == 22.0);
  CHECK_THROWS_AS(records_from_eval_json(Json::parse(R"({"records":[{"image_id":"a"}]})")),
                  Error);

  const auto cmp = compare_models(part, part);
  const Json cdoc = comparison_json(config, cmp);
  CHECK(cdoc["histogram"]["counts"] == Json::array({8}));
  CHECK(cdoc["outliers"].empty());
  CHECK(cdoc["quadrants"]["easy_edge"]["mean_diff"]["psnr"] == 0.0);
}
