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

#ifndef DESPECKLE_DIRECTIONAL_H_
#define DESPECKLE_DIRECTIONAL_H_

#include <array>
#include <functional>
#include <string>
#include <string_view>

#include "despeckle/gray_image.h"

namespace despeckle {

// Directional smoothing. Every interior pixel is replaced by the mean of the
// neighbours along one of four lines through it (horizontal, vertical, main
// diagonal, anti-diagonal), the line whose mean is closest to the pixel
// itself. The centre never enters the averages, and pixels within
// (window - 1) / 2 of the border are copied through untouched.

enum class ScanMode {
  // Row-major scan writing each result back immediately, so later pixels see
  // already-smoothed neighbours. Inherently serial.
  kInPlaceSequential,
  // Every pixel reads the original image; rows are processed in parallel.
  kOutOfPlace,
};

ScanMode ParseScanMode(std::string_view name);  // "in-place" | "out-of-place"
std::string ScanModeName(ScanMode mode);

inline constexpr int kDirectionCount = 4;
inline constexpr int kMaxDirectionalWindow = 33;

struct DirectionalConfig {
  ScanMode scan_mode = ScanMode::kInPlaceSequential;
  int window = 3;  // odd, 3..33
  int directions = kDirectionCount;

  // Throws ArgumentError on an even or out-of-range window, or a direction
  // count other than four.
  void Validate() const;
};

// Candidates for one 3x3 neighbourhood, in the order horizontal, vertical,
// main diagonal (top-left/bottom-right), anti-diagonal (bottom-left/top-right).
struct DirectionSelection {
  std::array<double, kDirectionCount> averages{};
  std::array<double, kDirectionCount> deviations{};  // |average - centre|
  int chosen = 0;  // 0-based; first index attaining the minimum deviation
};

// (r, c) must be interior: 1 <= r <= rows-2, 1 <= c <= cols-2.
DirectionSelection DirectionalAverages3x3(const GrayImage& image, int r, int c);

// Single 3x3 directional pass. cfg.window must be 3.
GrayImage EdsPass(const GrayImage& image, const DirectionalConfig& cfg = {});

// Odd windows 3..33. Each direction averages the 2*(window/2) pixels on its
// ray. With window 3 the result is bit-identical to EdsPass.
GrayImage GeneralizedDirectionalPass(const GrayImage& image,
                                     const DirectionalConfig& cfg);

// Directional pass straight on linear intensities (the DS baseline).
GrayImage DsFilter(const GrayImage& image, const DirectionalConfig& cfg = {});

// Runs `inner` between the log/exp legs of the 8-bit homomorphic chain:
// add 1, natural log, inner, exp, round, subtract 1, quantize to [0, 255].
// Input must be integral in [0, 255].
GrayImage HomomorphicFilter(
    const GrayImage& image,
    const std::function<GrayImage(const GrayImage&)>& inner);

// HomomorphicFilter around GeneralizedDirectionalPass. The default config is
// the canonical EDS: 3x3 window, in-place sequential scan.
GrayImage HomomorphicEds(const GrayImage& image,
                         const DirectionalConfig& cfg = {});

}  // namespace despeckle

#endif  // DESPECKLE_DIRECTIONAL_H_
