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

#include "despeckle/benchmark_spec.h"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>

namespace despeckle {
namespace {

struct FilterName {
  FilterKind kind;
  const char* key;
  const char* label;
};

constexpr FilterName kFilterNames[] = {
    {FilterKind::kMedian, "median", "Median"},
    {FilterKind::kLee, "lee", "Lee"},
    {FilterKind::kKuan, "kuan", "Kuan"},
    {FilterKind::kGamma, "gamma", "Gamma"},
    {FilterKind::kEnhancedLee, "enhanced-lee", "En-Lee"},
    {FilterKind::kFrost, "frost", "Frost"},
    {FilterKind::kEnhancedFrost, "enhanced-frost", "En-Frost"},
    {FilterKind::kDs, "ds", "DS"},
    {FilterKind::kEds, "eds", "EDS"},
};

const FilterName& Lookup(FilterKind kind) {
  for (const auto& name : kFilterNames) {
    if (name.kind == kind) return name;
  }
  throw ArgumentError("unknown filter kind");
}

template <typename T>
bool ParseNumber(std::string_view text, T& out) {
  if (text.empty()) return false;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && end == text.data() + text.size();
}

std::vector<std::string_view> Split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(separator, start);
    parts.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

}  // namespace

std::vector<FilterKind> AllFilters() {
  std::vector<FilterKind> all;
  for (const auto& name : kFilterNames) all.push_back(name.kind);
  return all;
}

std::string FilterKey(FilterKind kind) { return Lookup(kind).key; }
std::string FilterLabel(FilterKind kind) { return Lookup(kind).label; }

FilterKind ParseFilterKind(std::string_view key) {
  for (const auto& name : kFilterNames) {
    if (key == name.key) return name.kind;
  }
  throw UsageError("unknown filter '" + std::string(key) + "'");
}

std::vector<FilterKind> ParseFilterList(std::string_view list) {
  std::vector<FilterKind> filters;
  for (std::string_view key : Split(list, ',')) {
    if (key.empty()) throw UsageError("empty entry in filter list");
    const FilterKind kind = ParseFilterKind(key);
    if (std::ranges::find(filters, kind) != filters.end()) {
      throw UsageError("filter '" + std::string(key) + "' listed twice");
    }
    filters.push_back(kind);
  }
  return filters;
}

SyntheticInput ParseSyntheticDescriptor(std::string_view text) {
  const auto parts = Split(text, ':');
  if (parts.size() != 3 || parts[0] != "constant") {
    throw UsageError("synthetic input must look like constant:VALUE:ROWSxCOLS, got '" +
                     std::string(text) + "'");
  }
  SyntheticInput input;
  if (!ParseNumber(parts[1], input.value) || !std::isfinite(input.value) ||
      input.value < 0.0 || input.value > 255.0) {
    throw UsageError("synthetic value must be a number in [0, 255]");
  }
  const auto dims = Split(parts[2], 'x');
  if (dims.size() != 2 || !ParseNumber(dims[0], input.rows) ||
      !ParseNumber(dims[1], input.cols) || input.rows < 1 || input.cols < 1) {
    throw UsageError("synthetic size must be ROWSxCOLS with positive integers");
  }
  return input;
}

bool BenchmarkSpec::HasCleanReference() const {
  return synthetic.has_value() || speckle_family.has_value();
}

std::string BenchmarkSpec::InputStem() const {
  return input_path ? input_path->stem().string() : "synthetic";
}

SpeckleParams BenchmarkSpec::Speckle() const {
  if (!speckle_family || !seed) {
    throw UsageError("speckle requires a family and a seed");
  }
  return {*speckle_family, speckle_looks, *seed};
}

void BenchmarkSpec::Validate() const {
  if (input_path.has_value() == synthetic.has_value()) {
    throw UsageError("exactly one of --input or --synthetic is required");
  }
  if (speckle_family && !seed) {
    throw UsageError("--speckle requires --seed");
  }
  if (speckle_looks < 1) throw UsageError("speckle looks must be >= 1");
  if (filters.empty()) throw UsageError("filter list is empty");
  for (std::size_t i = 0; i < filters.size(); ++i) {
    if (std::find(filters.begin() + i + 1, filters.end(), filters[i]) !=
        filters.end()) {
      throw UsageError("duplicate filter '" + FilterKey(filters[i]) + "'");
    }
  }
  if (window < 3 || window > kMaxDirectionalWindow || window % 2 == 0) {
    throw UsageError("--window must be odd and within [3, " +
                     std::to_string(kMaxDirectionalWindow) + "], got " +
                     std::to_string(window));
  }
  if (looks && !(*looks > 0.0)) throw UsageError("--looks must be positive");
  if (enl_tile < 1) throw UsageError("--enl-tile must be positive");
}

BenchmarkSpec ParseCommandLine(int argc, const char* const* argv) {
  CLI::App app{"Despeckle a grayscale image with a bank of speckle filters "
               "and report NV, MSD, ENL and DR for each."};
  app.name("despeckle");

  std::string input;
  std::string synthetic;
  std::string speckle;
  std::string filters;
  std::string scan_mode = "in-place";
  std::string format = "csv";
  std::string out = ".";
  BenchmarkSpec spec;
  std::uint64_t seed = 0;
  double looks = 0.0;

  auto* input_opt = app.add_option("--input", input, "8-bit PGM or BMP image");
  auto* synthetic_opt = app.add_option(
      "--synthetic", synthetic, "Clean synthetic scene, constant:VALUE:ROWSxCOLS");
  input_opt->excludes(synthetic_opt);
  auto* speckle_opt = app.add_option("--speckle", speckle,
                 "Multiply by speckle: rayleigh | exponential | gamma[:LOOKS]");
  auto* seed_opt = app.add_option("--seed", seed, "Speckle RNG seed");
  auto* filters_opt = app.add_option("--filters", filters,
                 "Comma-separated filters (default: all nine)");
  app.add_option("--window", spec.window, "Odd kernel size (default 3)");
  auto* looks_opt = app.add_option(
      "--looks", looks, "Looks L for the classic filters (default: tiled ENL)");
  app.add_option("--scan-mode", scan_mode,
                 "Directional scan: in-place | out-of-place");
  app.add_option("--enl-tile", spec.enl_tile, "ENL tile size (default 25)");
  app.add_option("--out", out, "Output directory (default .)");
  app.add_option("--format", format, "Report format: csv | markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  try {
    if (*input_opt) spec.input_path = input;
    if (*synthetic_opt) spec.synthetic = ParseSyntheticDescriptor(synthetic);
    if (*speckle_opt) {
      const auto parts = Split(speckle, ':');
      if (parts.size() > 2) throw UsageError("--speckle expects FAMILY[:LOOKS]");
      spec.speckle_family = ParseSpeckleFamily(parts[0]);
      if (parts.size() == 2 && !ParseNumber(parts[1], spec.speckle_looks)) {
        throw UsageError("speckle looks must be a positive integer");
      }
    }
    if (*seed_opt) spec.seed = seed;
    if (*filters_opt) spec.filters = ParseFilterList(filters);
    if (*looks_opt) spec.looks = looks;
    spec.scan_mode = ParseScanMode(scan_mode);
    if (format == "csv") {
      spec.format = ReportFormat::kCsv;
    } else if (format == "markdown" || format == "md") {
      spec.format = ReportFormat::kMarkdown;
    } else {
      throw UsageError("--format must be csv or markdown");
    }
    spec.output_dir = out;
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
  spec.Validate();
  return spec;
}

}  // namespace despeckle
