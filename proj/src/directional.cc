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

#include "despeckle/directional.h"

#include <cmath>
#include <cstddef>
#include <string>

#include "despeckle/pixel_depth.h"

namespace despeckle {
namespace {

// First endpoint of each unit ray; the second endpoint is the negation. The
// order of the pair inside each sum follows the reference pseudocode.
constexpr std::array<std::array<int, 2>, kDirectionCount> kRays = {{
    {0, -1},   // horizontal: left, right
    {-1, 0},   // vertical: up, down
    {-1, -1},  // main diagonal: top-left, bottom-right
    {1, -1},   // anti-diagonal: bottom-left, top-right
}};

struct Choice {
  double value;
  int index;
};

// Picks the ray mean closest to the centre. `v` points at the image origin.
inline Choice Select(const double* v, int cols, int r, int c, int half) {
  const double center = v[static_cast<std::size_t>(r) * cols + c];
  const auto at = [&](int rr, int cc) {
    return v[static_cast<std::size_t>(rr) * cols + cc];
  };
  Choice best{0.0, -1};
  double best_deviation = 0.0;
  for (int n = 0; n < kDirectionCount; ++n) {
    const int dr = kRays[n][0];
    const int dc = kRays[n][1];
    double sum = at(r + dr, c + dc) + at(r - dr, c - dc);
    for (int k = 2; k <= half; ++k) {
      sum += at(r + k * dr, c + k * dc);
      sum += at(r - k * dr, c - k * dc);
    }
    const double average = sum / (2 * half);
    const double deviation = std::abs(average - center);
    if (best.index < 0 || deviation < best_deviation) {
      best = {average, n};
      best_deviation = deviation;
    }
  }
  return best;
}

void RequireFits(const GrayImage& image, int window, const char* context) {
  if (image.rows() < window || image.cols() < window) {
    throw ArgumentError(std::string(context) + ": image " +
                        std::to_string(image.rows()) + "x" +
                        std::to_string(image.cols()) + " smaller than " +
                        std::to_string(window) + "x" + std::to_string(window) +
                        " window");
  }
}

GrayImage DirectionalPass(const GrayImage& image, const DirectionalConfig& cfg) {
  const int half = cfg.window / 2;
  const int rows = image.rows();
  const int cols = image.cols();
  GrayImage out = image;

  if (cfg.scan_mode == ScanMode::kInPlaceSequential) {
    double* v = out.pixels().data();
    for (int r = half; r < rows - half; ++r) {
      for (int c = half; c < cols - half; ++c) {
        v[static_cast<std::size_t>(r) * cols + c] =
            Select(v, cols, r, c, half).value;
      }
    }
    return out;
  }

  const double* src = image.pixels().data();
  double* dst = out.pixels().data();
#pragma omp parallel for schedule(static)
  for (int r = half; r < rows - half; ++r) {
    for (int c = half; c < cols - half; ++c) {
      dst[static_cast<std::size_t>(r) * cols + c] =
          Select(src, cols, r, c, half).value;
    }
  }
  return out;
}

}  // namespace

ScanMode ParseScanMode(std::string_view name) {
  if (name == "in-place" || name == "in-place-sequential") {
    return ScanMode::kInPlaceSequential;
  }
  if (name == "out-of-place") return ScanMode::kOutOfPlace;
  throw ArgumentError("unknown scan mode '" + std::string(name) + "'");
}

std::string ScanModeName(ScanMode mode) {
  return mode == ScanMode::kInPlaceSequential ? "in-place" : "out-of-place";
}

void DirectionalConfig::Validate() const {
  if (window < 3 || window > kMaxDirectionalWindow || window % 2 == 0) {
    throw ArgumentError("directional window must be odd and within [3, " +
                        std::to_string(kMaxDirectionalWindow) + "], got " +
                        std::to_string(window));
  }
  if (directions != kDirectionCount) {
    throw ArgumentError("only four directions are supported, got " +
                        std::to_string(directions));
  }
}

DirectionSelection DirectionalAverages3x3(const GrayImage& image, int r, int c) {
  if (r < 1 || r > image.rows() - 2 || c < 1 || c > image.cols() - 2) {
    throw ArgumentError("DirectionalAverages3x3: (" + std::to_string(r) + ", " +
                        std::to_string(c) + ") is not an interior pixel");
  }
  DirectionSelection selection;
  const double center = image(r, c);
  for (int n = 0; n < kDirectionCount; ++n) {
    const int dr = kRays[n][0];
    const int dc = kRays[n][1];
    selection.averages[n] = (image(r + dr, c + dc) + image(r - dr, c - dc)) / 2;
    selection.deviations[n] = std::abs(selection.averages[n] - center);
    if (selection.deviations[n] < selection.deviations[selection.chosen]) {
      selection.chosen = n;
    }
  }
  return selection;
}

GrayImage EdsPass(const GrayImage& image, const DirectionalConfig& cfg) {
  cfg.Validate();
  if (cfg.window != 3) {
    throw ArgumentError("EdsPass is the 3x3 pass; use "
                        "GeneralizedDirectionalPass for window " +
                        std::to_string(cfg.window));
  }
  RequireFits(image, 3, "EdsPass");
  RequireFinite(image, "EdsPass");
  return DirectionalPass(image, cfg);
}

GrayImage GeneralizedDirectionalPass(const GrayImage& image,
                                     const DirectionalConfig& cfg) {
  cfg.Validate();
  RequireFits(image, cfg.window, "GeneralizedDirectionalPass");
  RequireFinite(image, "GeneralizedDirectionalPass");
  return DirectionalPass(image, cfg);
}

GrayImage DsFilter(const GrayImage& image, const DirectionalConfig& cfg) {
  return GeneralizedDirectionalPass(image, cfg);
}

GrayImage HomomorphicFilter(
    const GrayImage& image,
    const std::function<GrayImage(const GrayImage&)>& inner) {
  if (!IsQuantized(image)) {
    throw ArgumentError(
        "HomomorphicFilter: input must be integral and within [0, 255]");
  }
  GrayImage log_image = image;
  for (double& p : log_image.pixels()) p = std::log(p + 1.0);

  GrayImage out = inner(log_image);
  for (double& p : out.pixels()) p = std::round(std::exp(p)) - 1.0;
  return Quantize(out);
}

GrayImage HomomorphicEds(const GrayImage& image, const DirectionalConfig& cfg) {
  cfg.Validate();
  return HomomorphicFilter(image, [&](const GrayImage& log_image) {
    return GeneralizedDirectionalPass(log_image, cfg);
  });
}

}  // namespace despeckle
