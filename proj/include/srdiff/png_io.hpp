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

#ifndef SRDIFF_PNG_IO_HPP_
#define SRDIFF_PNG_IO_HPP_

#include <filesystem>

#include "srdiff/image.hpp"

namespace srdiff {

// Decodes any PNG to 8-bit RGB: gray is replicated, alpha dropped, palettes
// expanded, 16-bit samples reduced. Throws kIo or kDecode.
RgbImage read_png(const std::filesystem::path& path);

// Writes an 8-bit RGB PNG with fixed encoder settings (byte-reproducible).
void write_png(const std::filesystem::path& path, const RgbImage& img);

}  // namespace srdiff

#endif  // SRDIFF_PNG_IO_HPP_
