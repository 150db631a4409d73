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

// Command-line front end: despeckle --input scene.pgm --out run/
//                      or despeckle --synthetic constant:100:256x256
//                                   --speckle exponential --seed 7 --out run/

#include <iostream>

#include "despeckle/benchmark_runner.h"
#include "despeckle/benchmark_spec.h"

int main(int argc, char** argv) {
  using namespace despeckle;

  BenchmarkSpec spec;
  try {
    spec = ParseCommandLine(argc, argv);
  } catch (const HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "despeckle: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  try {
    const BenchmarkResult result = RunBenchmark(spec);
    std::cout << (spec.format == ReportFormat::kCsv
                      ? FormatCsv(result)
                      : FormatMarkdown(result, spec));
    std::cerr << "scan mode " << ScanModeName(spec.scan_mode) << ", looks "
              << FormatNumber(result.looks) << "; wrote "
              << result.written.size() << " files to "
              << spec.output_dir.string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "despeckle: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
