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

#ifndef DESPECKLE_REFERENCE_METRICS_H_
#define DESPECKLE_REFERENCE_METRICS_H_

#include "despeckle/gray_image.h"

namespace despeckle::reference {

// Plain serial double loops over the whole image.
double BruteNoiseVariance(const GrayImage& image);
double BruteMeanSquareDifference(const GrayImage& filtered,
                                 const GrayImage& original);
// Mean of (mu/sigma)^2 over whole, non-flat tiles. Returns NaN if none.
double BruteEnl(const GrayImage& image, int tile);
// Mean of local standardized residuals over interior pixels. NaN if none.
double BruteDeflectionRatio(const GrayImage& image, int window);

}  // namespace despeckle::reference

#endif  // DESPECKLE_REFERENCE_METRICS_H_
