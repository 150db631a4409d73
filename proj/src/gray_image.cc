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

#include "despeckle/gray_image.h"

#include <cmath>
#include <string>
#include <utility>

namespace despeckle {
namespace {

void CheckDimensions(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw ArgumentError("image dimensions must be positive, got " +
                        std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

GrayImage::GrayImage(int rows, int cols, double fill)
    : rows_(rows), cols_(cols) {
  CheckDimensions(rows, cols);
  pixels_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

GrayImage::GrayImage(int rows, int cols, std::vector<double> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
  CheckDimensions(rows, cols);
  if (pixels_.size() != static_cast<std::size_t>(rows) * cols) {
    throw ArgumentError("pixel buffer holds " + std::to_string(pixels_.size()) +
                        " values, expected " +
                        std::to_string(static_cast<std::size_t>(rows) * cols));
  }
}

GrayImage GrayImage::FromRows(
    std::initializer_list<std::initializer_list<double>> rows) {
  if (rows.size() == 0) throw ArgumentError("FromRows: no rows");
  const std::size_t cols = rows.begin()->size();
  std::vector<double> pixels;
  pixels.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw ArgumentError("FromRows: ragged rows");
    pixels.insert(pixels.end(), row.begin(), row.end());
  }
  return GrayImage(static_cast<int>(rows.size()), static_cast<int>(cols),
                   std::move(pixels));
}

void RequireFinite(const GrayImage& image, std::string_view context) {
  for (int r = 0; r < image.rows(); ++r) {
    for (int c = 0; c < image.cols(); ++c) {
      if (!std::isfinite(image(r, c))) {
        throw ArgumentError(std::string(context) + ": non-finite pixel at (" +
                            std::to_string(r) + ", " + std::to_string(c) +
                            ")");
      }
    }
  }
}

void RequireSameShape(const GrayImage& a, const GrayImage& b,
                      std::string_view context) {
  if (!a.SameShape(b)) {
    throw ArgumentError(std::string(context) + ": dimension mismatch " +
                        std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  }
}

}  // namespace despeckle
