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

#include "srdiff/wavelet.hpp"

#include <string>

#include "srdiff/error.hpp"
#include "srdiff/kernels.hpp"

namespace srdiff {

namespace {

// Symlet-19 scaling filter (decomposition order), as tabulated in the
// standard wavelet coefficient references.
constexpr std::array<double, kSym19Taps> kSym19Lowpass = {
    5.487732768215838e-07, -6.463651303345963e-07,
    -1.1880518269823984e-05, 8.873312173729286e-06,
    0.0001155392333357879, -4.612039600210587e-05,
    -0.000635764515004334, 0.00015915804768084938,
    0.0021214250281823303, -0.0011607032572062486,
    -0.005122205002583014, 0.007968438320613306,
    0.01579743929567463, -0.02265199337824595,
    -0.046635983534938946, 0.0070155738571741596,
    0.008954591173043624, -0.06752505804029409,
    0.10902582508127781, 0.578144945338605,
    0.7195555257163943, 0.2582661692372836,
    -0.17659686625203097, -0.11624173010739675,
    0.09363084341589714, 0.08407267627924504,
    -0.016908234861345205, -0.02770989693131125,
    0.004319351874894969, 0.008262236955528255,
    -0.0006179223277983108, -0.0017049602611649971,
    0.00012930767650701415, 0.0002762187768573407,
    -1.6821387029373716e-05, -2.8151138661550245e-05,
    2.0623170632395688e-06, 1.7509367995348687e-06,
};

WaveletFilterPair make_sym19() {
  WaveletFilterPair f{kSym19Lowpass, {}};
  for (std::size_t k = 0; k < kSym19Taps; ++k) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    f.highpass[k] = sign * kSym19Lowpass[kSym19Taps - 1 - k];
  }
  return f;
}

}  // namespace

const WaveletFilterPair& sym19_filters() {
  static const WaveletFilterPair filters = make_sym19();
  return filters;
}

std::size_t subband_length(std::size_t n) {
  return kernels::analysis_length(n, kSym19Taps);
}

WaveletSubbands dwt2(const RealMatrix& p, const WaveletFilterPair& f) {
  if (p.width() < kSym19Taps || p.height() < kSym19Taps) {
    throw Error(ErrorKind::kInputSmallerThanFilter,
                "dwt2 needs at least 38x38, got " + std::to_string(p.width()) +
                    "x" + std::to_string(p.height()));
  }
  const std::size_t out_w = subband_length(p.width());
  const std::size_t out_h = subband_length(p.height());

  RealMatrix row_lo(out_w, p.height());
  RealMatrix row_hi(out_w, p.height());
  kernels::analyze_rows(p, f.lowpass, f.highpass, row_lo, row_hi);

  WaveletSubbands s{RealMatrix(out_w, out_h), RealMatrix(out_w, out_h),
                    RealMatrix(out_w, out_h), RealMatrix(out_w, out_h)};
  kernels::analyze_columns(row_lo, f.lowpass, f.highpass, s.ll, s.lh);
  kernels::analyze_columns(row_hi, f.lowpass, f.highpass, s.hl, s.hh);
  return s;
}

SubbandEnergy subband_l1(const WaveletSubbands& s) {
  return {kernels::abs_sum(s.lh), kernels::abs_sum(s.hl), kernels::abs_sum(s.hh)};
}

}  // namespace srdiff
