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

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "srdiff/error.hpp"
#include "srdiff/wavelet.hpp"
#include "test_support.hpp"

using namespace srdiff;
using namespace srdiff::testing;

TEST_CASE("sym19 filter identities") {
  const auto& f = sym19_filters();
  REQUIRE(f.lowpass.size() == 38);
  const double sum_lo = std::accumulate(f.lowpass.begin(), f.lowpass.end(), 0.0);
  const double sum_hi = std::accumulate(f.highpass.begin(), f.highpass.end(), 0.0);
  double energy = 0.0;
  double cross = 0.0;
  for (std::size_t i = 0; i < 38; ++i) {
    energy += f.lowpass[i] * f.lowpass[i];
    cross += f.lowpass[i] * f.highpass[i];
  }
  CHECK(std::fabs(sum_lo - std::sqrt(2.0)) < 1e-10);
  CHECK(std::fabs(sum_hi) < 1e-10);
  CHECK(std::fabs(energy - 1.0) < 1e-10);
  CHECK(std::fabs(cross) < 1e-10);
  for (std::size_t m = 1; m < 19; ++m) {
    double shifted = 0.0;
    for (std::size_t k = 0; k + 2 * m < 38; ++k) shifted += f.lowpass[k] * f.lowpass[k + 2 * m];
    CAPTURE(m);
    CHECK(std::fabs(shifted) < 1e-8);
  }
}

TEST_CASE("subband dimensions follow ceil((n + 37) / 2)") {
  for (std::size_t n : {38u, 39u, 40u, 51u, 64u, 101u}) {
    const auto s = dwt2(LumaPlane(n, 45, 1.0));
    CHECK(s.ll.width() == (n + 37 + 1) / 2);
    CHECK(s.ll.height() == (45 + 37 + 1) / 2);
    CHECK(s.hh.width() == s.ll.width());
    CHECK(s.lh.height() == s.ll.height());
    CHECK(subband_length(n) == s.ll.width());
  }
}

TEST_CASE("dwt2 of a constant plane") {
  const auto s = dwt2(LumaPlane(48, 40, 10.0));
  for (double v : s.ll.samples()) CHECK(std::fabs(v - 20.0) < 1e-8);
  for (const auto* band : {&s.lh, &s.hl, &s.hh}) {
    for (double v : band->samples()) CHECK(std::fabs(v) < 1e-8);
  }
}

TEST_CASE("dwt2 matches the brute-force convolution oracle") {
  std::mt19937_64 rng(2024);
  const auto& f = sym19_filters();
  const auto p = random_plane(64, 64, rng);
  const auto s = dwt2(p);
  const auto o = oracle_dwt2(p, f);
  CHECK(max_abs_diff(s.ll, o.ll) < 1e-9);
  CHECK(max_abs_diff(s.lh, o.lh) < 1e-9);
  CHECK(max_abs_diff(s.hl, o.hl) < 1e-9);
  CHECK(max_abs_diff(s.hh, o.hh) < 1e-9);
}

TEST_CASE("lh responds to horizontal edges, hl to vertical ones") {
  LumaPlane horizontal(64, 64, 0.0);
  for (std::size_t y = 32; y < 64; ++y)
    for (std::size_t x = 0; x < 64; ++x) horizontal(x, y) = 200.0;
  const auto e = subband_l1(dwt2(horizontal));
  CHECK(e.lh > 1000.0 * (e.hl + 1e-12));
  const auto et = subband_l1(dwt2(horizontal.transposed()));
  CHECK(et.hl > 1000.0 * (et.lh + 1e-12));
}

TEST_CASE("dwt2 transposition symmetry") {
  std::mt19937_64 rng(5);
  const auto p = random_plane(50, 50, rng);
  const auto s = dwt2(p);
  const auto t = dwt2(p.transposed());
  CHECK(max_abs_diff(t.ll, s.ll.transposed()) < 1e-12);
  CHECK(max_abs_diff(t.hh, s.hh.transposed()) < 1e-12);
  CHECK(max_abs_diff(t.lh, s.hl.transposed()) < 1e-12);
  CHECK(max_abs_diff(t.hl, s.lh.transposed()) < 1e-12);
}

TEST_CASE("dwt2 linearity") {
  std::mt19937_64 rng(6);
  const auto p = random_plane(45, 52, rng);
  const auto q = random_plane(45, 52, rng);
  const double a = 0.7, b = -1.3;
  LumaPlane mix(45, 52);
  for (std::size_t i = 0; i < mix.size(); ++i) {
    mix.samples()[i] = a * p.samples()[i] + b * q.samples()[i];
  }
  const auto sp = dwt2(p), sq = dwt2(q), sm = dwt2(mix);
  for (auto member : {&WaveletSubbands::ll, &WaveletSubbands::lh, &WaveletSubbands::hl,
                      &WaveletSubbands::hh}) {
    const auto& bp = sp.*member;
    const auto& bq = sq.*member;
    const auto& bm = sm.*member;
    double worst = 0.0;
    for (std::size_t i = 0; i < bm.size(); ++i) {
      worst = std::max(worst, std::fabs(bm.samples()[i] -
                                        (a * bp.samples()[i] + b * bq.samples()[i])));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("test-only inverse reconstructs the input") {
  std::mt19937_64 rng(8);
  for (auto [w, h] : {std::pair<std::size_t, std::size_t>{38, 38}, {64, 47}, {71, 90}}) {
    const auto p = random_plane(w, h, rng);
    const auto back = inverse_dwt2(dwt2(p), sym19_filters(), w, h);
    CHECK(max_abs_diff(back, p) < 1e-8);
  }
}

TEST_CASE("dwt2 rejects planes smaller than the filter") {
  try {
    dwt2(LumaPlane(37, 64, 0.0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInputSmallerThanFilter);
  }
  CHECK_THROWS_AS(dwt2(LumaPlane(64, 20, 0.0)), Error);
}

TEST_CASE("subband_l1") {
  WaveletSubbands zero{RealMatrix(2, 2), RealMatrix(2, 2), RealMatrix(2, 2), RealMatrix(2, 2)};
  const auto z = subband_l1(zero);
  CHECK(z.lh == 0.0);
  CHECK(z.hl == 0.0);
  CHECK(z.hh == 0.0);

  WaveletSubbands s = zero;
  s.lh = RealMatrix(2, 2, std::vector<double>{1.0, -1.0, 2.0, -2.0});
  CHECK(subband_l1(s).lh == 6.0);

  std::mt19937_64 rng(9);
  std::normal_distribution<double> g(0.0, 10.0);
  WaveletSubbands r{RealMatrix(30, 20), RealMatrix(30, 20), RealMatrix(30, 20), RealMatrix(30, 20)};
  for (auto* m : {&r.lh, &r.hl, &r.hh})
    for (double& v : m->samples()) v = g(rng);
  const auto e = subband_l1(r);
  // Naive loop in the same row-major order.
  auto naive = [](const RealMatrix& m) {
    double total = 0.0;
    for (std::size_t y = 0; y < m.height(); ++y) {
      double row = 0.0;
      for (std::size_t x = 0; x < m.width(); ++x) row += std::fabs(m(x, y));
      total += row;
    }
    return total;
  };
  CHECK(e.lh == naive(r.lh));
  CHECK(e.hl == naive(r.hl));
  CHECK(e.hh == naive(r.hh));
  CHECK(e.hh >= 0.0);
}
