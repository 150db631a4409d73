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

#ifndef DESPECKLE_REFERENCE_FILTERS_H_
#define DESPECKLE_REFERENCE_FILTERS_H_

#include "despeckle/classic_filters.h"
#include "despeckle/gray_image.h"

namespace despeckle::reference {

// Serial per-pixel versions of the classic filter bank. Each pixel gathers
// its window into a fresh vector, recomputes its statistics from scratch and
// evaluates the closed-form rule.

GrayImage NaiveMedian(const GrayImage& image, const ClassicFilterConfig& cfg);
GrayImage NaiveLee(const GrayImage& image, const ClassicFilterConfig& cfg);
GrayImage NaiveKuan(const GrayImage& image, const ClassicFilterConfig& cfg);
GrayImage NaiveFrost(const GrayImage& image, const ClassicFilterConfig& cfg);
GrayImage NaiveEnhancedLee(const GrayImage& image,
                           const ClassicFilterConfig& cfg);
GrayImage NaiveEnhancedFrost(const GrayImage& image,
                             const ClassicFilterConfig& cfg);
GrayImage NaiveGammaMap(const GrayImage& image, const ClassicFilterConfig& cfg);

}  // namespace despeckle::reference

#endif  // DESPECKLE_REFERENCE_FILTERS_H_
