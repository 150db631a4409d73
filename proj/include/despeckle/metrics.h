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

#ifndef DESPECKLE_METRICS_H_
#define DESPECKLE_METRICS_H_

#include <optional>
#include <string>

#include "despeckle/gray_image.h"

namespace despeckle {

// Assessment parameters for despeckled imagery. Sums are accumulated per row
// in parallel and then combined in row order, so results do not depend on the
// thread count. Standard deviations use the population (1/N) convention.

// Mean of squared pixel values, (1/N) sum u^2. There is no mean subtraction.
double NoiseVariance(const GrayImage& image);

// (1/N) sum (filtered - original)^2. Shapes must match.
double MeanSquareDifference(const GrayImage& filtered,
                            const GrayImage& original);

inline constexpr int kDefaultEnlTile = 25;

struct EnlResult {
  double enl = 0.0;
  int tiles_used = 0;
};

// Average of (mu/sigma)^2 over non-overlapping tile x tile blocks anchored at
// the top-left corner. Partial blocks on the right and bottom are dropped and
// flat blocks (sigma = 0) are skipped. Throws ArgumentError when the image is
// smaller than one tile and DegenerateInputError when every block is flat.
EnlResult EnlTiled(const GrayImage& image, int tile = kDefaultEnlTile);

// Mean over interior pixels of (v - mu) / sigma, with mu and sigma taken over
// the window x window neighbourhood (centre included). Pixels with a flat
// neighbourhood are skipped; DegenerateInputError if none remain.
double DeflectionRatio(const GrayImage& image, int window = 3);

// One row of an assessment table. MSD is absent for the unfiltered row;
// ENL and DR are absent when the image gives them nothing to measure
// (e.g. a constant image). `msd_clean` is only set when a ground-truth image
// is known.
struct MetricsReport {
  std::string filter_name;
  double nv = 0.0;
  std::optional<double> msd;
  std::optional<double> enl;
  int tiles_used = 0;
  std::optional<double> dr;
  std::optional<double> msd_clean;
};

// Fills every column it can. `original` and `clean` may be null.
MetricsReport Assess(std::string filter_name, const GrayImage& image,
                     const GrayImage* original, const GrayImage* clean,
                     int enl_tile = kDefaultEnlTile, int dr_window = 3);

}  // namespace despeckle

#endif  // DESPECKLE_METRICS_H_
