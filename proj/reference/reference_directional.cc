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

#include "reference_directional.h"

#include <cmath>
#include <utility>
#include <vector>

namespace despeckle::reference {

GrayImage LiteralDirectionalSmoothing(const GrayImage& input) {
  GrayImage out = input;
  const int ROW = out.rows();
  const int COL = out.cols();
  auto v = [&](int r, int c) -> double& { return out(r - 1, c - 1); };

  double d[5];
  double D[5];
  for (int r = 2; r <= ROW - 1; ++r) {
    for (int c = 2; c <= COL - 1; ++c) {
      d[1] = (v(r, c - 1) + v(r, c + 1)) / 2;
      d[2] = (v(r - 1, c) + v(r + 1, c)) / 2;
      d[3] = (v(r - 1, c - 1) + v(r + 1, c + 1)) / 2;
      d[4] = (v(r + 1, c - 1) + v(r - 1, c + 1)) / 2;
      for (int n = 1; n <= 4; ++n) D[n] = std::abs(d[n] - v(r, c));
      int aDmin = 1;
      double Dmin = D[1];
      for (int n = 2; n <= 4; ++n) {
        if (D[n] < Dmin) {
          Dmin = D[n];
          aDmin = n;
        }
      }
      v(r, c) = d[aDmin];
    }
  }
  return out;
}

GrayImage NaiveDirectionalPass(const GrayImage& image, int window,
                               bool in_place) {
  const int half = window / 2;
  GrayImage out = image;
  const GrayImage& source = in_place ? out : image;

  // (dr, dc) of the first endpoint; the opposite endpoint mirrors it.
  const std::pair<int, int> rays[4] = {{0, -1}, {-1, 0}, {-1, -1}, {1, -1}};

  for (int r = half; r < image.rows() - half; ++r) {
    for (int c = half; c < image.cols() - half; ++c) {
      const double center = source(r, c);
      double chosen = 0.0;
      double best = INFINITY;
      for (const auto& [dr, dc] : rays) {
        std::vector<std::pair<int, int>> coords;
        for (int k = 1; k <= half; ++k) {
          coords.emplace_back(r + k * dr, c + k * dc);
          coords.emplace_back(r - k * dr, c - k * dc);
        }
        double sum = 0.0;
        bool first = true;
        for (const auto& [rr, cc] : coords) {
          sum = first ? source(rr, cc) : sum + source(rr, cc);
          first = false;
        }
        const double mean = sum / static_cast<double>(coords.size());
        if (std::abs(mean - center) < best) {
          best = std::abs(mean - center);
          chosen = mean;
        }
      }
      out(r, c) = chosen;
    }
  }
  return out;
}

}  // namespace despeckle::reference
