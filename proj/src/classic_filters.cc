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

#include "despeckle/classic_filters.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace despeckle {
namespace {

// One window gathered row-major into a contiguous buffer.
struct Window {
  std::span<const double> values;
  std::span<const double> distances;  // Euclidean offset from the centre
  double center;
  LocalStats stats;
};

LocalStats StatsOf(std::span<const double> values) {
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double x : values) sum += x;
  const double mean = sum / n;
  double squares = 0.0;
  for (double x : values) squares += (x - mean) * (x - mean);
  return {mean, squares / n};
}

std::vector<double> DistanceTable(int window) {
  const int half = window / 2;
  std::vector<double> distances;
  distances.reserve(static_cast<std::size_t>(window) * window);
  for (int dr = -half; dr <= half; ++dr) {
    for (int dc = -half; dc <= half; ++dc) {
      distances.push_back(std::sqrt(static_cast<double>(dr * dr + dc * dc)));
    }
  }
  return distances;
}

void RequireFits(const GrayImage& image, int window, const char* name) {
  if (image.rows() < window || image.cols() < window) {
    throw ArgumentError(std::string(name) + ": image " +
                        std::to_string(image.rows()) + "x" +
                        std::to_string(image.cols()) + " smaller than " +
                        std::to_string(window) + "x" + std::to_string(window) +
                        " window");
  }
}

// Applies `kernel(const Window&) -> double` to every interior pixel.
template <typename Kernel>
GrayImage ForEachWindow(const GrayImage& image, const ClassicFilterConfig& cfg,
                        const char* name, Kernel kernel) {
  cfg.Validate();
  RequireFits(image, cfg.window, name);
  RequireFinite(image, name);

  const int half = cfg.window / 2;
  const int rows = image.rows();
  const int cols = image.cols();
  const std::vector<double> distances = DistanceTable(cfg.window);
  const double* src = image.pixels().data();
  GrayImage out = image;
  double* dst = out.pixels().data();

#pragma omp parallel
  {
    std::vector<double> buffer(distances.size());
#pragma omp for schedule(static)
    for (int r = half; r < rows - half; ++r) {
      for (int c = half; c < cols - half; ++c) {
        std::size_t i = 0;
        for (int wr = r - half; wr <= r + half; ++wr) {
          const double* line = src + static_cast<std::size_t>(wr) * cols;
          for (int wc = c - half; wc <= c + half; ++wc) buffer[i++] = line[wc];
        }
        const Window w{buffer, distances,
                       src[static_cast<std::size_t>(r) * cols + c],
                       StatsOf(buffer)};
        dst[static_cast<std::size_t>(r) * cols + c] = kernel(w);
      }
    }
  }
  return out;
}

double WeightedMean(const Window& w, double exponent_scale) {
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < w.values.size(); ++k) {
    const double weight = std::exp(-exponent_scale * w.distances[k]);
    weighted += weight * w.values[k];
    total += weight;
  }
  return weighted / total;
}

}  // namespace

double ClassicFilterConfig::NoiseVariation() const {
  return cu.value_or(1.0 / std::sqrt(looks));
}

double ClassicFilterConfig::MaxVariation() const {
  return cmax.value_or(std::sqrt(1.0 + 2.0 / looks));
}

void ClassicFilterConfig::Validate() const {
  if (window < 3 || window % 2 == 0) {
    throw ArgumentError("filter window must be odd and >= 3, got " +
                        std::to_string(window));
  }
  if (!(looks > 0.0)) throw ArgumentError("looks must be positive");
  if (!(damping > 0.0)) throw ArgumentError("damping must be positive");
  const double cu_value = NoiseVariation();
  if (!(cu_value > 0.0)) throw ArgumentError("cu must be positive");
  if (!(MaxVariation() > cu_value)) throw ArgumentError("cmax must exceed cu");
}

double LocalStats::Variation() const {
  return mean > 0.0 ? std::sqrt(variance) / mean : 0.0;
}

LocalStats ComputeLocalStats(const GrayImage& image, int r, int c, int window) {
  const int half = window / 2;
  if (window < 1 || window % 2 == 0 || r - half < 0 || c - half < 0 ||
      r + half >= image.rows() || c + half >= image.cols()) {
    throw ArgumentError("ComputeLocalStats: " + std::to_string(window) + "x" +
                        std::to_string(window) + " window at (" +
                        std::to_string(r) + ", " + std::to_string(c) +
                        ") overruns the image");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(window) * window);
  for (int wr = r - half; wr <= r + half; ++wr) {
    for (int wc = c - half; wc <= c + half; ++wc) values.push_back(image(wr, wc));
  }
  return StatsOf(values);
}

GrayImage MedianFilter(const GrayImage& image, const ClassicFilterConfig& cfg) {
  return ForEachWindow(image, cfg, "MedianFilter", [](const Window& w) {
    // Window copies are tiny; nth_element needs a mutable one.
    thread_local std::vector<double> scratch;
    scratch.assign(w.values.begin(), w.values.end());
    const auto middle = scratch.begin() + scratch.size() / 2;
    std::nth_element(scratch.begin(), middle, scratch.end());
    return *middle;
  });
}

GrayImage LeeFilter(const GrayImage& image, const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  return ForEachWindow(image, cfg, "LeeFilter", [cu](const Window& w) {
    const double m = w.stats.mean;
    const double ci = w.stats.Variation();
    if (m <= 0.0 || ci <= cu) return m;
    const double weight = std::clamp(1.0 - (cu * cu) / (ci * ci), 0.0, 1.0);
    return m + weight * (w.center - m);
  });
}

GrayImage KuanFilter(const GrayImage& image, const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  return ForEachWindow(image, cfg, "KuanFilter", [cu](const Window& w) {
    const double m = w.stats.mean;
    const double ci = w.stats.Variation();
    if (m <= 0.0 || ci <= cu) return m;
    const double weight = std::clamp(
        (1.0 - (cu * cu) / (ci * ci)) / (1.0 + cu * cu), 0.0, 1.0);
    return m + weight * (w.center - m);
  });
}

GrayImage FrostFilter(const GrayImage& image, const ClassicFilterConfig& cfg) {
  const double damping = cfg.damping;
  return ForEachWindow(image, cfg, "FrostFilter", [damping](const Window& w) {
    const double ci = w.stats.Variation();
    return WeightedMean(w, damping * ci * ci);
  });
}

GrayImage EnhancedLeeFilter(const GrayImage& image,
                            const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  const double cmax = cfg.MaxVariation();
  const double damping = cfg.damping;
  return ForEachWindow(image, cfg, "EnhancedLeeFilter", [=](const Window& w) {
    const double m = w.stats.mean;
    const double ci = w.stats.Variation();
    if (ci <= cu) return m;
    if (ci >= cmax) return w.center;
    const double weight = std::exp(-damping * (ci - cu) / (cmax - ci));
    return weight * m + (1.0 - weight) * w.center;
  });
}

GrayImage EnhancedFrostFilter(const GrayImage& image,
                              const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  const double cmax = cfg.MaxVariation();
  const double damping = cfg.damping;
  return ForEachWindow(image, cfg, "EnhancedFrostFilter", [=](const Window& w) {
    const double ci = w.stats.Variation();
    if (ci <= cu) return w.stats.mean;
    if (ci >= cmax) return w.center;
    return WeightedMean(w, damping * (ci - cu) / (cmax - ci));
  });
}

GrayImage GammaMapFilter(const GrayImage& image,
                         const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  const double cmax = cfg.MaxVariation();
  const double looks = cfg.looks;
  return ForEachWindow(image, cfg, "GammaMapFilter", [=](const Window& w) {
    const double m = w.stats.mean;
    const double ci = w.stats.Variation();
    if (ci <= cu) return m;
    if (ci >= cmax) return w.center;
    const double alpha = (1.0 + cu * cu) / (ci * ci - cu * cu);
    const double b = alpha - looks - 1.0;
    const double discriminant = b * b * m * m + 4.0 * alpha * looks * m * w.center;
    if (discriminant < 0.0) return m;
    return (b * m + std::sqrt(discriminant)) / (2.0 * alpha);
  });
}

}  // namespace despeckle
