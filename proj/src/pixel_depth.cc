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

#include "despeckle/pixel_depth.h"

#include <algorithm>
#include <cmath>

namespace despeckle {

double QuantizeValue(double value, const PixelDepthPolicy& policy) {
  return std::clamp(std::round(value), policy.low, policy.high);
}

GrayImage Quantize(const GrayImage& image, const PixelDepthPolicy& policy) {
  RequireFinite(image, "Quantize");
  GrayImage out = image;
  for (double& p : out.pixels()) p = QuantizeValue(p, policy);
  return out;
}

bool IsQuantized(const GrayImage& image, const PixelDepthPolicy& policy) {
  return std::ranges::all_of(image.pixels(), [&](double p) {
    return p >= policy.low && p <= policy.high && std::round(p) == p;
  });
}

}  // namespace despeckle
