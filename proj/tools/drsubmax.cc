// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end:
//   drsubmax run --config exp.json [--set key=value]... [--output out.csv]
//   drsubmax summarize a.csv b.csv ... [--output summary.csv]

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drsubmax/experiments.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

namespace ex = drsubmax::experiments;

// Writes through `write` to `path`, or to stdout when `path` is empty.
template <typename Fn>
void WithOutput(const std::string& path, Fn write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw drsubmax::UsageError("cannot write " + path);
  write(out);
  if (!out) throw std::runtime_error("failed writing " + path);
}

int Run(const std::string& config_path, const std::vector<std::string>& overrides,
        std::string output) {
  ex::Json config = ex::LoadConfig(config_path);
  for (const std::string& o : overrides) ex::ApplyOverride(config, o);
  if (output.empty() && config.contains("output")) {
    if (!config["output"].is_string()) throw ex::ConfigError("output", "expected a string");
    output = config["output"].get<std::string>();
  }
  ex::RunContext ctx;
  ctx.base_dir = std::filesystem::path(config_path).parent_path();
  if (ctx.base_dir.empty()) ctx.base_dir = ".";
  // Run fully before touching the output file so errors leave no partial CSV.
  const std::string csv = ex::RunExperimentToString(config, ctx);
  WithOutput(output, [&](std::ostream& out) { out << csv; });
  return 0;
}

int Summarize(const std::vector<std::string>& files, const std::string& output) {
  const auto rows = ex::Summarize(files);
  WithOutput(output, [&](std::ostream& out) { ex::WriteSummary(rows, out); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online and offline DR-submodular maximization experiments"};
  app.require_subcommand(1);

  std::string config_path, run_output;
  std::vector<std::string> overrides;
  CLI::App* run = app.add_subcommand("run", "Run one experiment config and write CSV");
  run->add_option("--config", config_path, "Experiment JSON config")->required();
  run->add_option("--set", overrides, "Override a config field, key=value (repeatable)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  run->add_option("--output,-o", run_output, "CSV destination (default: config or stdout)");

  std::vector<std::string> files;
  std::string summary_output;
  CLI::App* summarize = app.add_subcommand("summarize", "Aggregate result CSVs");
  summarize->add_option("files", files, "CSV files with a common schema")->required();
  summarize->add_option("--output,-o", summary_output, "Summary destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run) return Run(config_path, overrides, run_output);
    return Summarize(files, summary_output);
  } catch (const drsubmax::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
