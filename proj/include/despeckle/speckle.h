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

#ifndef DESPECKLE_SPECKLE_H_
#define DESPECKLE_SPECKLE_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "despeckle/gray_image.h"

namespace despeckle {

enum class SpeckleFamily {
  kRayleighAmplitude,     // single-look amplitude
  kExponentialIntensity,  // single-look intensity
  kGammaMultilook,        // L-look intensity
};

// Accepts "rayleigh", "exponential", "gamma" and the long forms
// "rayleigh-amplitude", "exponential-intensity", "gamma-multilook".
SpeckleFamily ParseSpeckleFamily(std::string_view name);
std::string SpeckleFamilyName(SpeckleFamily family);

struct SpeckleParams {
  SpeckleFamily family = SpeckleFamily::kExponentialIntensity;
  int looks = 1;  // only read by kGammaMultilook
  std::uint64_t seed = 0;
};

// Unit-mean i.i.d. multiplicative noise field, drawn in row-major order from
// std::mt19937_64(seed). Each uniform is the top 53 bits of one engine output
// scaled into [0, 1), and every family is an exact transform of those:
//   exponential: -log(1 - u)
//   gamma(L, 1/L): sum of L exponential draws, divided by L
//   rayleigh: sqrt(2/pi) * sqrt(-2 log(1 - u))
// Gamma with L = 1 therefore reproduces the exponential field bit for bit.
GrayImage GenerateSpeckleField(int rows, int cols, const SpeckleParams& params);

// v = u * s, pixelwise. No quantization.
GrayImage ApplySpeckle(const GrayImage& clean, const GrayImage& field);

}  // namespace despeckle

#endif  // DESPECKLE_SPECKLE_H_
