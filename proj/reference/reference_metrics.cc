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

#include "reference_metrics.h"

#include <cmath>
#include <limits>
#include <vector>

namespace despeckle::reference {
namespace {

// Mean and population standard deviation of a list.
void MeanStd(const std::vector<double>& xs, double& mean, double& stddev) {
  double s = 0.0;
  for (double x : xs) s += x;
  mean = s / xs.size();
  double q = 0.0;
  for (double x : xs) q += (x - mean) * (x - mean);
  stddev = std::sqrt(q / xs.size());
}

}  // namespace

double BruteNoiseVariance(const GrayImage& image) {
  double s = 0.0;
  for (int r = 0; r < image.rows(); ++r) {
    for (int c = 0; c < image.cols(); ++c) s += image(r, c) * image(r, c);
  }
  return s / (image.rows() * image.cols());
}

double BruteMeanSquareDifference(const GrayImage& filtered,
                                 const GrayImage& original) {
  double s = 0.0;
  for (int r = 0; r < filtered.rows(); ++r) {
    for (int c = 0; c < filtered.cols(); ++c) {
      const double d = filtered(r, c) - original(r, c);
      s += d * d;
    }
  }
  return s / (filtered.rows() * filtered.cols());
}

double BruteEnl(const GrayImage& image, int tile) {
  double total = 0.0;
  int used = 0;
  for (int r0 = 0; r0 + tile <= image.rows(); r0 += tile) {
    for (int c0 = 0; c0 + tile <= image.cols(); c0 += tile) {
      std::vector<double> xs;
      for (int r = r0; r < r0 + tile; ++r) {
        for (int c = c0; c < c0 + tile; ++c) xs.push_back(image(r, c));
      }
      double mean, stddev;
      MeanStd(xs, mean, stddev);
      if (stddev == 0.0) continue;
      total += (mean / stddev) * (mean / stddev);
      ++used;
    }
  }
  return used ? total / used : std::numeric_limits<double>::quiet_NaN();
}

double BruteDeflectionRatio(const GrayImage& image, int window) {
  const int h = window / 2;
  double total = 0.0;
  long long used = 0;
  for (int r = h; r < image.rows() - h; ++r) {
    for (int c = h; c < image.cols() - h; ++c) {
      std::vector<double> xs;
      for (int i = r - h; i <= r + h; ++i) {
        for (int j = c - h; j <= c + h; ++j) xs.push_back(image(i, j));
      }
      double mean, stddev;
      MeanStd(xs, mean, stddev);
      if (stddev == 0.0) continue;
      total += (image(r, c) - mean) / stddev;
      ++used;
    }
  }
  return used ? total / used : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace despeckle::reference
