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

#ifndef DESPECKLE_REFERENCE_DIRECTIONAL_H_
#define DESPECKLE_REFERENCE_DIRECTIONAL_H_

#include "despeckle/gray_image.h"

namespace despeckle::reference {

// Line-by-line transcription of the 3x3 directional smoothing loop, with
// 1-based (r, c) indexing and a MATLAB-style min() that reports the first
// minimum. Updates in place as it scans.
GrayImage LiteralDirectionalSmoothing(const GrayImage& v);

// Serial pass over odd windows. Each direction collects its ray coordinates
// explicitly before averaging. `in_place` selects the sequential scan.
GrayImage NaiveDirectionalPass(const GrayImage& image, int window,
                               bool in_place);

}  // namespace despeckle::reference

#endif  // DESPECKLE_REFERENCE_DIRECTIONAL_H_
