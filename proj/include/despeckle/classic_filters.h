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

#ifndef DESPECKLE_CLASSIC_FILTERS_H_
#define DESPECKLE_CLASSIC_FILTERS_H_

#include <optional>

#include "despeckle/gray_image.h"

namespace despeckle {

// Parameters shared by the local-statistics speckle filters. Every filter
// reads only the original image and copies a border of width window/2
// through unchanged. Rows are processed in parallel.
struct ClassicFilterConfig {
  int window = 3;               // odd, >= 3
  double looks = 1.0;           // L
  double damping = 1.0;         // D, Frost-family exponent scale
  std::optional<double> cu;     // noise variation; default 1/sqrt(L)
  std::optional<double> cmax;   // heterogeneity threshold; default sqrt(1+2/L)

  double NoiseVariation() const;
  double MaxVariation() const;

  // Throws ArgumentError unless window is odd >= 3, looks > 0, damping > 0,
  // NoiseVariation() > 0 and MaxVariation() > NoiseVariation().
  void Validate() const;
};

// Mean and population variance over a full window, centre included.
struct LocalStats {
  double mean = 0.0;
  double variance = 0.0;

  // sqrt(variance) / mean; 0 when mean <= 0.
  double Variation() const;
};

// The window centred at (r, c) must lie entirely inside the image.
LocalStats ComputeLocalStats(const GrayImage& image, int r, int c, int window);

GrayImage MedianFilter(const GrayImage& image, const ClassicFilterConfig& cfg);

// m + W (v - m), W = 1 - cu^2/ci^2 clamped to [0, 1].
GrayImage LeeFilter(const GrayImage& image, const ClassicFilterConfig& cfg);

// As Lee with W = (1 - cu^2/ci^2) / (1 + cu^2).
GrayImage KuanFilter(const GrayImage& image, const ClassicFilterConfig& cfg);

// Weighted window mean, weights exp(-D ci^2 |k|) with |k| the Euclidean
// distance to the centre.
GrayImage FrostFilter(const GrayImage& image, const ClassicFilterConfig& cfg);

// The three-region filters below return the local mean when ci <= cu and the
// centre pixel untouched when ci >= cmax.

// Middle region: W m + (1 - W) v with W = exp(-D (ci - cu) / (cmax - ci)).
GrayImage EnhancedLeeFilter(const GrayImage& image,
                            const ClassicFilterConfig& cfg);

// Middle region: Frost weighting with exponent -D (ci - cu)/(cmax - ci) |k|.
GrayImage EnhancedFrostFilter(const GrayImage& image,
                              const ClassicFilterConfig& cfg);

// Middle region: maximum a posteriori estimate under a gamma scene prior,
//   (B m + sqrt(B^2 m^2 + 4 alpha L m v)) / (2 alpha),
//   alpha = (1 + cu^2) / (ci^2 - cu^2),  B = alpha - L - 1,
// falling back to m on a negative discriminant.
GrayImage GammaMapFilter(const GrayImage& image,
                         const ClassicFilterConfig& cfg);

}  // namespace despeckle

#endif  // DESPECKLE_CLASSIC_FILTERS_H_
