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

#ifndef DESPECKLE_BENCHMARK_RUNNER_H_
#define DESPECKLE_BENCHMARK_RUNNER_H_

#include <filesystem>
#include <string>
#include <vector>

#include "despeckle/benchmark_spec.h"
#include "despeckle/classic_filters.h"
#include "despeckle/directional.h"
#include "despeckle/gray_image.h"
#include "despeckle/metrics.h"

namespace despeckle {

struct FilterSettings {
  ClassicFilterConfig classic;
  DirectionalConfig directional;
};

// Runs one filter on an 8-bit image and returns an 8-bit result. EDS is the
// homomorphic pipeline; every other filter is quantized afterwards so all
// rows are compared in the same domain.
GrayImage RunFilter(FilterKind kind, const GrayImage& noisy,
                    const FilterSettings& settings);

struct BenchmarkResult {
  std::vector<MetricsReport> rows;  // rows[0] is the unfiltered input
  bool has_clean = false;
  double looks = 1.0;
  bool looks_estimated = false;
  std::vector<std::filesystem::path> written;
};

// Loads or synthesizes the input, runs every requested filter, writes the
// filtered PGMs and the report into spec.output_dir, and returns the table.
BenchmarkResult RunBenchmark(const BenchmarkSpec& spec);

// Shortest decimal string that parses back to the same double.
std::string FormatNumber(double value);

// Header "filter,nv,msd,enl,dr" (+ ",msd_clean" with a clean reference).
// Absent values are empty fields. LF line endings.
std::string FormatCsv(const BenchmarkResult& result);
std::string FormatMarkdown(const BenchmarkResult& result,
                           const BenchmarkSpec& spec);

}  // namespace despeckle

#endif  // DESPECKLE_BENCHMARK_RUNNER_H_
