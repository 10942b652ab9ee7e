// Copyright 2026 The Trellis Authors. All Rights Reserved.
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

// Command-line entry point: trellis <command> [options] <input>

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "trellis/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Forced dynamics of trellises and graph maps"};
  app.require_subcommand(1);
  trellis::cli::RunConfig cfg;
  std::string regions;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--regions", regions, "Region set: comma-separated names, all, or expanding");
    sub->add_option("--tol", cfg.tol, "Spectral radius tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-len", cfg.max_len, "Longest code length")->check(CLI::Range(1u, 64u));
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--budget", cfg.budget, "Enumeration budget (matrix products)");
  };

  const char* with_input[][2] = {
      {"analyze", "Run the full pipeline and report"},
      {"counts", "Periodic-orbit counts per region code"},
      {"shift", "Edge shift of the selected regions"},
      {"lefschetz", "Lefschetz numbers of region codes"},
      {"validate", "Check an input document"},
  };
  for (const auto& [name, help] : with_input) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "Input JSON document")->required();
    add_common(sub);
    sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }
  auto* typen = app.add_subcommand("typen", "Generate and analyze the type-n trellis");
  typen->add_option("n", cfg.type_n, "n >= 2")->required()->check(CLI::Range(2, 64));
  add_common(typen);
  typen->callback([&cfg] { cfg.command = "typen"; });

  CLI11_PARSE(app, argc, argv);
  if (!regions.empty()) cfg.regions = regions;

  const auto result = trellis::cli::run(cfg);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
