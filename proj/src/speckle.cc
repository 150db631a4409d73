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

#include "despeckle/speckle.h"

#include <cmath>
#include <numbers>
#include <random>

namespace despeckle {
namespace {

class UnitUniform {
 public:
  explicit UnitUniform(std::uint64_t seed) : engine_(seed) {}
  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

double Exponential(UnitUniform& uniform) { return -std::log1p(-uniform()); }

}  // namespace

SpeckleFamily ParseSpeckleFamily(std::string_view name) {
  if (name == "rayleigh" || name == "rayleigh-amplitude") {
    return SpeckleFamily::kRayleighAmplitude;
  }
  if (name == "exponential" || name == "exponential-intensity") {
    return SpeckleFamily::kExponentialIntensity;
  }
  if (name == "gamma" || name == "gamma-multilook") {
    return SpeckleFamily::kGammaMultilook;
  }
  throw ArgumentError("unknown speckle family '" + std::string(name) + "'");
}

std::string SpeckleFamilyName(SpeckleFamily family) {
  switch (family) {
    case SpeckleFamily::kRayleighAmplitude: return "rayleigh-amplitude";
    case SpeckleFamily::kExponentialIntensity: return "exponential-intensity";
    case SpeckleFamily::kGammaMultilook: return "gamma-multilook";
  }
  return "unknown";
}

GrayImage GenerateSpeckleField(int rows, int cols, const SpeckleParams& params) {
  if (rows < 1 || cols < 1) {
    throw ArgumentError("speckle field dimensions must be positive");
  }
  if (params.looks < 1) throw ArgumentError("looks must be >= 1");

  GrayImage field(rows, cols);
  UnitUniform uniform(params.seed);
  switch (params.family) {
    case SpeckleFamily::kExponentialIntensity:
      for (double& s : field.pixels()) s = Exponential(uniform);
      break;
    case SpeckleFamily::kGammaMultilook:
      for (double& s : field.pixels()) {
        double sum = 0.0;
        for (int k = 0; k < params.looks; ++k) sum += Exponential(uniform);
        s = sum / params.looks;
      }
      break;
    case SpeckleFamily::kRayleighAmplitude: {
      const double scale = std::sqrt(2.0 / std::numbers::pi);
      for (double& s : field.pixels()) {
        s = scale * std::sqrt(2.0 * Exponential(uniform));
      }
      break;
    }
  }
  return field;
}

GrayImage ApplySpeckle(const GrayImage& clean, const GrayImage& field) {
  RequireSameShape(clean, field, "ApplySpeckle");
  GrayImage out = clean;
  auto noisy = out.pixels();
  auto noise = field.pixels();
  for (std::size_t i = 0; i < noisy.size(); ++i) noisy[i] *= noise[i];
  return out;
}

}  // namespace despeckle
