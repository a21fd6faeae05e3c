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

// The OpenMP kernels must agree bit-for-bit with the serial reference at
// every thread count.

#include <omp.h>

#include <random>

#include "doctest.h"
#include "srdiff/kernels.hpp"
#include "srdiff/wavelet.hpp"
#include "test_support.hpp"

namespace k = srdiff::kernels;
using srdiff::RealMatrix;
using srdiff::testing::random_plane;

namespace {

class ThreadScope {
 public:
  explicit ThreadScope(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadScope() { omp_set_num_threads(saved_); }

 private:
  int saved_;
};

}  // namespace

TEST_CASE("symmetric_index mirrors about the half sample") {
  CHECK(k::symmetric_index(-1, 5) == 0);
  CHECK(k::symmetric_index(-2, 5) == 1);
  CHECK(k::symmetric_index(5, 5) == 4);
  CHECK(k::symmetric_index(6, 5) == 3);
  CHECK(k::symmetric_index(10, 5) == 0);   // second reflection
  CHECK(k::symmetric_index(-11, 5) == 0);
  for (int i = 0; i < 5; ++i) CHECK(k::symmetric_index(i, 5) == static_cast<std::size_t>(i));
}

TEST_CASE("analysis_length matches ceil((n + L - 1) / 2)") {
  for (std::size_t n = 38; n < 80; ++n) {
    CHECK(k::analysis_length(n, 38) == (n + 37 + 1) / 2);
  }
}

TEST_CASE("parallel kernels equal the serial reference") {
  std::mt19937_64 rng(7);
  const auto& f = srdiff::sym19_filters();
  for (int threads : {1, 3, 8}) {
    ThreadScope scope(threads);
    CAPTURE(threads);
    for (auto [w, h] : {std::pair<std::size_t, std::size_t>{64, 64}, {83, 41}, {40, 97}}) {
      const RealMatrix p = random_plane(w, h, rng);
      const RealMatrix q = random_plane(w, h, rng);

      RealMatrix a(w / 2, h / 2), b(w / 2, h / 2);
      k::box_downsample2(p, a);
      k::serial::box_downsample2(p, b);
      CHECK(a == b);

      RealMatrix up_a(2 * w + 1, 2 * h + 3), up_b(2 * w + 1, 2 * h + 3);
      k::bilinear_resize(p, up_a);
      k::serial::bilinear_resize(p, up_b);
      CHECK(up_a == up_b);

      RealMatrix rot_a(w / 2, h / 2), rot_b(w / 2, h / 2);
      k::rotate_window(p, 0.6, rot_a);
      k::serial::rotate_window(p, 0.6, rot_b);
      CHECK(rot_a == rot_b);

      const std::size_t ow = k::analysis_length(w, 38);
      RealMatrix lo_a(ow, h), hi_a(ow, h), lo_b(ow, h), hi_b(ow, h);
      k::analyze_rows(p, f.lowpass, f.highpass, lo_a, hi_a);
      k::serial::analyze_rows(p, f.lowpass, f.highpass, lo_b, hi_b);
      CHECK(lo_a == lo_b);
      CHECK(hi_a == hi_b);

      const std::size_t oh = k::analysis_length(h, 38);
      RealMatrix cl_a(w, oh), ch_a(w, oh), cl_b(w, oh), ch_b(w, oh);
      k::analyze_columns(p, f.lowpass, f.highpass, cl_a, ch_a);
      k::serial::analyze_columns(p, f.lowpass, f.highpass, cl_b, ch_b);
      CHECK(cl_a == cl_b);
      CHECK(ch_a == ch_b);

      RealMatrix se_a(w, h), se_b(w, h);
      k::squared_error(p, q, se_a);
      k::serial::squared_error(p, q, se_b);
      CHECK(se_a == se_b);

      CHECK(k::abs_sum(hi_a) == k::serial::abs_sum(hi_a));
      CHECK(k::sum(se_a) == k::serial::sum(se_a));
    }

    std::vector<std::uint8_t> rgb(3 * 200);
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& v : rgb) v = static_cast<std::uint8_t>(byte(rng));
    std::vector<double> ya(200), yb(200);
    const k::LumaWeights wts{16.0, 65.481 / 255.0, 128.553 / 255.0, 24.966 / 255.0, 16.0, 235.0};
    k::rgb_to_luma(rgb, wts, ya);
    k::serial::rgb_to_luma(rgb, wts, yb);
    CHECK(ya == yb);
  }
}
