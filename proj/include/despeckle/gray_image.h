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

#ifndef DESPECKLE_GRAY_IMAGE_H_
#define DESPECKLE_GRAY_IMAGE_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace despeckle {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a precondition (bad size, bad window, mismatched shapes).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed or truncated file contents.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Well-formed file in a variant we do not read (compressed BMP, 24-bit...).
class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

// A pixel value cannot be represented in the target encoding.
class RangeError : public Error {
 public:
  using Error::Error;
};

// The input carries no usable statistics (e.g. every tile is flat).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Row-major grid of real-valued pixels. Pixel (r, c) lives at
// pixels()[r * cols() + c]. Both dimensions are at least 1.
class GrayImage {
 public:
  GrayImage(int rows, int cols, double fill = 0.0);
  GrayImage(int rows, int cols, std::vector<double> pixels);

  // Builds an image from nested row literals; all rows must have equal length.
  static GrayImage FromRows(
      std::initializer_list<std::initializer_list<double>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return pixels_.size(); }

  double operator()(int r, int c) const {
    return pixels_[static_cast<std::size_t>(r) * cols_ + c];
  }
  double& operator()(int r, int c) {
    return pixels_[static_cast<std::size_t>(r) * cols_ + c];
  }

  std::span<const double> pixels() const { return pixels_; }
  std::span<double> pixels() { return pixels_; }

  std::span<const double> row(int r) const {
    return std::span<const double>(pixels_).subspan(
        static_cast<std::size_t>(r) * cols_, cols_);
  }

  bool SameShape(const GrayImage& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  bool operator==(const GrayImage& other) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<double> pixels_;
};

// Throws ArgumentError naming `context` and the first offending coordinate
// if any pixel is NaN or infinite.
void RequireFinite(const GrayImage& image, std::string_view context);

// Throws ArgumentError unless both images have the same dimensions.
void RequireSameShape(const GrayImage& a, const GrayImage& b,
                      std::string_view context);

}  // namespace despeckle

#endif  // DESPECKLE_GRAY_IMAGE_H_
