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

#ifndef DESPECKLE_PIXEL_DEPTH_H_
#define DESPECKLE_PIXEL_DEPTH_H_

#include "despeckle/gray_image.h"

namespace despeckle {

// 8-bit output policy: round to nearest integer with ties away from zero
// (std::round), then clamp into [low, high].
struct PixelDepthPolicy {
  double low = 0.0;
  double high = 255.0;
};

double QuantizeValue(double value, const PixelDepthPolicy& policy = {});

// Requires finite pixels.
GrayImage Quantize(const GrayImage& image, const PixelDepthPolicy& policy = {});

// True when every pixel is an integer inside [policy.low, policy.high].
bool IsQuantized(const GrayImage& image, const PixelDepthPolicy& policy = {});

}  // namespace despeckle

#endif  // DESPECKLE_PIXEL_DEPTH_H_
