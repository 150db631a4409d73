// Copyright 2026 The Despeckle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DESPECKLE_CODEC_H_
#define DESPECKLE_CODEC_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "despeckle/gray_image.h"

namespace despeckle {

using Bytes = std::vector<std::uint8_t>;

// Binary PGM ("P5"), maxval 255 only. Header comments are skipped.
// Throws DecodeError naming the offending header field or the payload.
GrayImage ReadPgm(std::span<const std::uint8_t> bytes);

// Canonical "P5\n<cols> <rows>\n255\n" + payload. Every pixel must already be
// an integer in [0, 255]; otherwise RangeError with the pixel coordinates.
Bytes WritePgm(const GrayImage& image);

// Uncompressed 8-bit indexed Windows bitmap. Palette entries with R=G=B map
// to that gray level, anything else to rounded Rec.601 luminance. Bottom-up
// and top-down row orders are both accepted.
GrayImage ReadBmp8(std::span<const std::uint8_t> bytes);

// Writes a bottom-up BMP with an identity gray palette (entry i = (i,i,i)).
// Same pixel requirements as WritePgm.
Bytes WriteBmp8(const GrayImage& image);

Bytes ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes);

// Dispatches on extension: ".bmp" (any case) is BMP, everything else PGM.
GrayImage ReadImageFile(const std::filesystem::path& path);
void WriteImageFile(const std::filesystem::path& path, const GrayImage& image);

}  // namespace despeckle

#endif  // DESPECKLE_CODEC_H_
