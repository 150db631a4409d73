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

#include "despeckle/benchmark_runner.h"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "despeckle/codec.h"
#include "despeckle/pixel_depth.h"
#include "despeckle/speckle.h"

namespace despeckle {
namespace {

std::string Field(const std::optional<double>& value, const char* absent) {
  return value ? FormatNumber(*value) : std::string(absent);
}

// Rounded tiled-ENL estimate of the number of looks, at least 1.
std::optional<double> EstimateLooks(const GrayImage& noisy, int tile) {
  try {
    const double enl = EnlTiled(noisy, tile).enl;
    return std::max(1.0, std::round(enl));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string DescribeInput(const BenchmarkSpec& spec) {
  std::string text;
  if (spec.synthetic) {
    text = "synthetic constant " + FormatNumber(spec.synthetic->value) + ", " +
           std::to_string(spec.synthetic->rows) + "x" +
           std::to_string(spec.synthetic->cols);
  } else {
    text = spec.input_path->filename().string();
  }
  if (spec.speckle_family) {
    text += ", " + SpeckleFamilyName(*spec.speckle_family) + " speckle";
    if (*spec.speckle_family == SpeckleFamily::kGammaMultilook) {
      text += " L=" + std::to_string(spec.speckle_looks);
    }
    text += " (seed " + std::to_string(*spec.seed) + ")";
  }
  return text;
}

nlohmann::ordered_json Describe(const BenchmarkSpec& spec,
                                const BenchmarkResult& result) {
  nlohmann::ordered_json meta;
  meta["input"] = DescribeInput(spec);
  meta["window"] = spec.window;
  meta["scan_mode"] = ScanModeName(spec.scan_mode);
  meta["looks"] = result.looks;
  meta["looks_estimated"] = result.looks_estimated;
  meta["damping"] = 1.0;
  meta["enl_tile"] = spec.enl_tile;
  meta["dr_window"] = spec.window;
  meta["msd_reference"] = "noisy input";
  meta["msd_clean"] = result.has_clean;
  std::vector<std::string> filters;
  for (FilterKind kind : spec.filters) filters.push_back(FilterKey(kind));
  meta["filters"] = filters;
  return meta;
}

}  // namespace

GrayImage RunFilter(FilterKind kind, const GrayImage& noisy,
                    const FilterSettings& settings) {
  switch (kind) {
    case FilterKind::kMedian:
      return Quantize(MedianFilter(noisy, settings.classic));
    case FilterKind::kLee:
      return Quantize(LeeFilter(noisy, settings.classic));
    case FilterKind::kKuan:
      return Quantize(KuanFilter(noisy, settings.classic));
    case FilterKind::kGamma:
      return Quantize(GammaMapFilter(noisy, settings.classic));
    case FilterKind::kEnhancedLee:
      return Quantize(EnhancedLeeFilter(noisy, settings.classic));
    case FilterKind::kFrost:
      return Quantize(FrostFilter(noisy, settings.classic));
    case FilterKind::kEnhancedFrost:
      return Quantize(EnhancedFrostFilter(noisy, settings.classic));
    case FilterKind::kDs:
      return Quantize(DsFilter(noisy, settings.directional));
    case FilterKind::kEds:
      return HomomorphicEds(noisy, settings.directional);
  }
  throw ArgumentError("unknown filter kind");
}

BenchmarkResult RunBenchmark(const BenchmarkSpec& spec) {
  spec.Validate();

  GrayImage clean =
      spec.synthetic
          ? GrayImage(spec.synthetic->rows, spec.synthetic->cols,
                      spec.synthetic->value)
          : ReadImageFile(*spec.input_path);
  GrayImage noisy =
      spec.speckle_family
          ? Quantize(ApplySpeckle(
                clean, GenerateSpeckleField(clean.rows(), clean.cols(),
                                            spec.Speckle())))
          : Quantize(clean);

  if (noisy.rows() < spec.window || noisy.cols() < spec.window) {
    throw Error("input " + std::to_string(noisy.rows()) + "x" +
                std::to_string(noisy.cols()) + " is smaller than the " +
                std::to_string(spec.window) + "x" + std::to_string(spec.window) +
                " window");
  }
  if (noisy.rows() < spec.enl_tile || noisy.cols() < spec.enl_tile) {
    throw Error("input is smaller than one " + std::to_string(spec.enl_tile) +
                "x" + std::to_string(spec.enl_tile) + " ENL tile");
  }

  BenchmarkResult result;
  result.has_clean = spec.HasCleanReference();
  if (spec.looks) {
    result.looks = *spec.looks;
  } else {
    result.looks = EstimateLooks(noisy, spec.enl_tile).value_or(1.0);
    result.looks_estimated = true;
  }

  FilterSettings settings;
  settings.classic.window = spec.window;
  settings.classic.looks = result.looks;
  settings.directional.window = spec.window;
  settings.directional.scan_mode = spec.scan_mode;

  std::filesystem::create_directories(spec.output_dir);
  const std::string stem = spec.InputStem();
  const GrayImage* clean_ref = result.has_clean ? &clean : nullptr;

  if (result.has_clean) {
    const auto path = spec.output_dir / (stem + "_noisy.pgm");
    WriteImageFile(path, noisy);
    result.written.push_back(path);
  }
  result.rows.push_back(
      Assess("noisy", noisy, nullptr, clean_ref, spec.enl_tile, spec.window));

  for (FilterKind kind : spec.filters) {
    const GrayImage filtered = RunFilter(kind, noisy, settings);
    const auto path = spec.output_dir / (stem + "_" + FilterKey(kind) + ".pgm");
    WriteImageFile(path, filtered);
    result.written.push_back(path);
    result.rows.push_back(Assess(FilterKey(kind), filtered, &noisy, clean_ref,
                                 spec.enl_tile, spec.window));
  }

  const bool csv = spec.format == ReportFormat::kCsv;
  const std::string report = csv ? FormatCsv(result) : FormatMarkdown(result, spec);
  const auto report_path = spec.output_dir / (csv ? "report.csv" : "report.md");
  WriteFileBytes(report_path, std::span(reinterpret_cast<const std::uint8_t*>(
                                            report.data()),
                                        report.size()));
  result.written.push_back(report_path);

  const std::string meta = Describe(spec, result).dump(2) + "\n";
  const auto meta_path = spec.output_dir / "report_meta.json";
  WriteFileBytes(meta_path, std::span(reinterpret_cast<const std::uint8_t*>(
                                          meta.data()),
                                      meta.size()));
  result.written.push_back(meta_path);
  return result;
}

std::string FormatNumber(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

std::string FormatCsv(const BenchmarkResult& result) {
  std::ostringstream out;
  out << "filter,nv,msd,enl,dr";
  if (result.has_clean) out << ",msd_clean";
  out << '\n';
  for (const MetricsReport& row : result.rows) {
    out << row.filter_name << ',' << FormatNumber(row.nv) << ','
        << Field(row.msd, "") << ',' << Field(row.enl, "") << ','
        << Field(row.dr, "");
    if (result.has_clean) out << ',' << Field(row.msd_clean, "");
    out << '\n';
  }
  return out.str();
}

std::string FormatMarkdown(const BenchmarkResult& result,
                           const BenchmarkSpec& spec) {
  std::ostringstream out;
  out << "# Assessment parameters vs. filters\n\n";
  out << "Input: " << DescribeInput(spec) << "  \n";
  out << "Kernel " << spec.window << "x" << spec.window << ", directional scan "
      << ScanModeName(spec.scan_mode) << ", looks L = "
      << FormatNumber(result.looks)
      << (result.looks_estimated ? " (estimated from tiled ENL)" : "")
      << ", damping 1, ENL tile " << spec.enl_tile << "\n\n";

  out << "| Filter | NV | MSD | ENL | DR |";
  if (result.has_clean) out << " MSD vs clean (extension) |";
  out << "\n|---|---|---|---|---|";
  if (result.has_clean) out << "---|";
  out << '\n';
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const MetricsReport& row = result.rows[i];
    const std::string label =
        i == 0 ? "Original noisy image"
               : FilterLabel(ParseFilterKind(row.filter_name));
    out << "| " << label << " | " << FormatNumber(row.nv) << " | "
        << Field(row.msd, "-") << " | " << Field(row.enl, "-") << " | "
        << Field(row.dr, "-") << " |";
    if (result.has_clean) out << ' ' << Field(row.msd_clean, "-") << " |";
    out << '\n';
  }
  return out.str();
}

}  // namespace despeckle
