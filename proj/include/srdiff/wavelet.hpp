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

#ifndef SRDIFF_WAVELET_HPP_
#define SRDIFF_WAVELET_HPP_

#include <array>
#include <cstddef>

#include "srdiff/image.hpp"

namespace srdiff {

inline constexpr std::size_t kSym19Taps = 38;

// Orthonormal decomposition filters. highpass[k] = (-1)^(k+1) lowpass[L-1-k].
struct WaveletFilterPair {
  std::array<double, kSym19Taps> lowpass;
  std::array<double, kSym19Taps> highpass;
};

// Symlet-19 decomposition pair.
const WaveletFilterPair& sym19_filters();

// One level of a separable 2-D DWT. Naming follows the filter applied along
// rows (x) then columns (y): lh is lowpass across x and highpass across y and
// so responds to horizontal edges; hl is the transpose orientation.
struct WaveletSubbands {
  RealMatrix ll;
  RealMatrix lh;
  RealMatrix hl;
  RealMatrix hh;
};

// Subband side for an input side of n samples: ceil((n + taps - 1) / 2).
std::size_t subband_length(std::size_t n);

// Half-point symmetric extension; output k of each 1-D pass aggregates the
// extended samples starting at index 2k. Throws kInputSmallerThanFilter when
// either side is below 38.
WaveletSubbands dwt2(const RealMatrix& p,
                     const WaveletFilterPair& f = sym19_filters());

struct SubbandEnergy {
  double lh;
  double hl;
  double hh;
};

// Sum of absolute coefficients per detail subband.
SubbandEnergy subband_l1(const WaveletSubbands& s);

}  // namespace srdiff

#endif  // SRDIFF_WAVELET_HPP_
