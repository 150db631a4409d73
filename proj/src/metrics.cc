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

#include "despeckle/metrics.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace despeckle {
namespace {

double SumInOrder(const std::vector<double>& partials) {
  double total = 0.0;
  for (double p : partials) total += p;
  return total;
}

}  // namespace

double NoiseVariance(const GrayImage& image) {
  const int rows = image.rows();
  std::vector<double> partial(rows, 0.0);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    double s = 0.0;
    for (double u : image.row(r)) s += u * u;
    partial[r] = s;
  }
  return SumInOrder(partial) / static_cast<double>(image.size());
}

double MeanSquareDifference(const GrayImage& filtered,
                            const GrayImage& original) {
  RequireSameShape(filtered, original, "MeanSquareDifference");
  const int rows = filtered.rows();
  std::vector<double> partial(rows, 0.0);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    const auto u = filtered.row(r);
    const auto v = original.row(r);
    double s = 0.0;
    for (std::size_t c = 0; c < u.size(); ++c) s += (u[c] - v[c]) * (u[c] - v[c]);
    partial[r] = s;
  }
  return SumInOrder(partial) / static_cast<double>(filtered.size());
}

EnlResult EnlTiled(const GrayImage& image, int tile) {
  if (tile < 1) throw ArgumentError("ENL tile must be positive");
  if (image.rows() < tile || image.cols() < tile) {
    throw ArgumentError("EnlTiled: image " + std::to_string(image.rows()) +
                        "x" + std::to_string(image.cols()) +
                        " smaller than one " + std::to_string(tile) + "x" +
                        std::to_string(tile) + " tile");
  }
  const int tile_rows = image.rows() / tile;
  const int tile_cols = image.cols() / tile;
  const int tiles = tile_rows * tile_cols;
  const double n = static_cast<double>(tile) * tile;

  // NaN marks a flat tile.
  std::vector<double> ratios(tiles);
#pragma omp parallel for schedule(static)
  for (int t = 0; t < tiles; ++t) {
    const int r0 = (t / tile_cols) * tile;
    const int c0 = (t % tile_cols) * tile;
    double sum = 0.0;
    for (int r = r0; r < r0 + tile; ++r) {
      for (int c = c0; c < c0 + tile; ++c) sum += image(r, c);
    }
    const double mean = sum / n;
    double squares = 0.0;
    for (int r = r0; r < r0 + tile; ++r) {
      for (int c = c0; c < c0 + tile; ++c) {
        squares += (image(r, c) - mean) * (image(r, c) - mean);
      }
    }
    const double variance = squares / n;
    ratios[t] = variance > 0.0 ? (mean * mean) / variance
                               : std::numeric_limits<double>::quiet_NaN();
  }

  EnlResult result;
  double total = 0.0;
  for (double ratio : ratios) {
    if (std::isnan(ratio)) continue;
    total += ratio;
    ++result.tiles_used;
  }
  if (result.tiles_used == 0) {
    throw DegenerateInputError("EnlTiled: every tile has zero variance");
  }
  result.enl = total / result.tiles_used;
  return result;
}

double DeflectionRatio(const GrayImage& image, int window) {
  if (window < 1 || window % 2 == 0) {
    throw ArgumentError("deflection window must be odd, got " +
                        std::to_string(window));
  }
  if (image.rows() < window || image.cols() < window) {
    throw ArgumentError("DeflectionRatio: image smaller than the window");
  }
  const int half = window / 2;
  const int rows = image.rows();
  const int cols = image.cols();
  const double n = static_cast<double>(window) * window;

  std::vector<double> row_sum(rows, 0.0);
  std::vector<long long> row_count(rows, 0);
#pragma omp parallel for schedule(static)
  for (int r = half; r < rows - half; ++r) {
    double s = 0.0;
    long long count = 0;
    for (int c = half; c < cols - half; ++c) {
      double sum = 0.0;
      for (int wr = r - half; wr <= r + half; ++wr) {
        for (int wc = c - half; wc <= c + half; ++wc) sum += image(wr, wc);
      }
      const double mean = sum / n;
      double squares = 0.0;
      for (int wr = r - half; wr <= r + half; ++wr) {
        for (int wc = c - half; wc <= c + half; ++wc) {
          squares += (image(wr, wc) - mean) * (image(wr, wc) - mean);
        }
      }
      const double sigma = std::sqrt(squares / n);
      if (sigma == 0.0) continue;
      s += (image(r, c) - mean) / sigma;
      ++count;
    }
    row_sum[r] = s;
    row_count[r] = count;
  }

  long long count = 0;
  for (long long k : row_count) count += k;
  if (count == 0) {
    throw DegenerateInputError(
        "DeflectionRatio: every neighbourhood has zero variance");
  }
  return SumInOrder(row_sum) / static_cast<double>(count);
}

MetricsReport Assess(std::string filter_name, const GrayImage& image,
                     const GrayImage* original, const GrayImage* clean,
                     int enl_tile, int dr_window) {
  MetricsReport report;
  report.filter_name = std::move(filter_name);
  report.nv = NoiseVariance(image);
  if (original != nullptr) report.msd = MeanSquareDifference(image, *original);
  if (clean != nullptr) report.msd_clean = MeanSquareDifference(image, *clean);
  try {
    const EnlResult enl = EnlTiled(image, enl_tile);
    report.enl = enl.enl;
    report.tiles_used = enl.tiles_used;
  } catch (const DegenerateInputError&) {
  }
  try {
    report.dr = DeflectionRatio(image, dr_window);
  } catch (const DegenerateInputError&) {
  }
  return report;
}

}  // namespace despeckle
