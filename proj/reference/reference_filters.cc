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

#include "reference_filters.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace despeckle::reference {
namespace {

struct Neighbourhood {
  std::vector<double> values;
  std::vector<double> distances;
  double center = 0.0;
  double mean = 0.0;
  double ci = 0.0;
};

using Rule = std::function<double(const Neighbourhood&)>;

GrayImage Apply(const GrayImage& image, int window, const Rule& rule) {
  const int half = window / 2;
  GrayImage out = image;
  for (int r = half; r < image.rows() - half; ++r) {
    for (int c = half; c < image.cols() - half; ++c) {
      Neighbourhood n;
      n.center = image(r, c);
      for (int dr = -half; dr <= half; ++dr) {
        for (int dc = -half; dc <= half; ++dc) {
          n.values.push_back(image(r + dr, c + dc));
          n.distances.push_back(std::hypot(dr, dc));
        }
      }
      const double count = static_cast<double>(n.values.size());
      double sum = 0.0;
      for (double x : n.values) sum += x;
      n.mean = sum / count;
      double dev = 0.0;
      for (double x : n.values) dev += (x - n.mean) * (x - n.mean);
      const double variance = dev / count;
      n.ci = n.mean > 0.0 ? std::sqrt(variance) / n.mean : 0.0;
      out(r, c) = rule(n);
    }
  }
  return out;
}

double Frost(const Neighbourhood& n, double scale) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < n.values.size(); ++k) {
    const double w = std::exp(-scale * n.distances[k]);
    num += w * n.values[k];
    den += w;
  }
  return num / den;
}

}  // namespace

GrayImage NaiveMedian(const GrayImage& image, const ClassicFilterConfig& cfg) {
  return Apply(image, cfg.window, [](const Neighbourhood& n) {
    std::vector<double> sorted = n.values;
    std::sort(sorted.begin(), sorted.end());
    return sorted[sorted.size() / 2];
  });
}

GrayImage NaiveLee(const GrayImage& image, const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  return Apply(image, cfg.window, [cu](const Neighbourhood& n) {
    if (n.mean <= 0.0 || n.ci <= cu) return n.mean;
    double w = 1.0 - (cu * cu) / (n.ci * n.ci);
    w = std::min(1.0, std::max(0.0, w));
    return n.mean + w * (n.center - n.mean);
  });
}

GrayImage NaiveKuan(const GrayImage& image, const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  return Apply(image, cfg.window, [cu](const Neighbourhood& n) {
    if (n.mean <= 0.0 || n.ci <= cu) return n.mean;
    double w = (1.0 - (cu * cu) / (n.ci * n.ci)) / (1.0 + cu * cu);
    w = std::min(1.0, std::max(0.0, w));
    return n.mean + w * (n.center - n.mean);
  });
}

GrayImage NaiveFrost(const GrayImage& image, const ClassicFilterConfig& cfg) {
  const double d = cfg.damping;
  return Apply(image, cfg.window, [d](const Neighbourhood& n) {
    return Frost(n, d * n.ci * n.ci);
  });
}

GrayImage NaiveEnhancedLee(const GrayImage& image,
                           const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  const double cmax = cfg.MaxVariation();
  const double d = cfg.damping;
  return Apply(image, cfg.window, [=](const Neighbourhood& n) {
    if (n.ci <= cu) return n.mean;
    if (n.ci >= cmax) return n.center;
    const double w = std::exp(-d * (n.ci - cu) / (cmax - n.ci));
    return n.mean * w + n.center * (1.0 - w);
  });
}

GrayImage NaiveEnhancedFrost(const GrayImage& image,
                             const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  const double cmax = cfg.MaxVariation();
  const double d = cfg.damping;
  return Apply(image, cfg.window, [=](const Neighbourhood& n) {
    if (n.ci <= cu) return n.mean;
    if (n.ci >= cmax) return n.center;
    return Frost(n, d * (n.ci - cu) / (cmax - n.ci));
  });
}

GrayImage NaiveGammaMap(const GrayImage& image, const ClassicFilterConfig& cfg) {
  const double cu = cfg.NoiseVariation();
  const double cmax = cfg.MaxVariation();
  const double L = cfg.looks;
  return Apply(image, cfg.window, [=](const Neighbourhood& n) {
    if (n.ci <= cu) return n.mean;
    if (n.ci >= cmax) return n.center;
    const double alpha = (1.0 + cu * cu) / (n.ci * n.ci - cu * cu);
    const double B = alpha - L - 1.0;
    const double disc =
        B * B * n.mean * n.mean + 4.0 * alpha * L * n.mean * n.center;
    if (disc < 0.0) return n.mean;
    return (B * n.mean + std::sqrt(disc)) / (2.0 * alpha);
  });
}

}  // namespace despeckle::reference
