// Copyright 2026 The reid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "reid/reid.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string format;
  std::optional<unsigned> threads;
  bool require_observed_overlap = false;
};

int exit_code_for(reid_status status) {
  switch (status) {
    case REID_OK: return kExitOk;
    case REID_E_INVALID_ARGUMENT:
    case REID_E_CONFIG: return kExitUsage;
    default: return kExitRuntime;
  }
}

int fail(reid_status status) {
  std::cerr << "reid: " << reid_status_name(status) << ": " << reid_last_error() << '\n';
  return exit_code_for(status);
}

int run(const std::string& command, const Options& opts) {
  std::ifstream in(opts.config_path, std::ios::binary);
  if (!in) {
    std::cerr << "reid: cannot open config '" << opts.config_path << "'\n";
    return kExitUsage;
  }
  std::stringstream text;
  text << in.rdbuf();

  nlohmann::json config;
  try {
    config = nlohmann::json::parse(text.str());
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "reid: config '" << opts.config_path << "' is not valid JSON: " << e.what()
              << '\n';
    return kExitUsage;
  }
  if (!config.is_object()) {
    std::cerr << "reid: config must be a JSON object\n";
    return kExitUsage;
  }
  if (opts.seed) config["seed"] = *opts.seed;
  if (!opts.format.empty()) config["format"] = opts.format;
  if (opts.threads) config["threads"] = *opts.threads;
  if (opts.require_observed_overlap) config["require_observed_overlap"] = true;

  const std::string base_dir =
      std::filesystem::absolute(opts.config_path).parent_path().string();
  reid_config* cfg = nullptr;
  if (reid_status s = reid_config_parse(config.dump().c_str(), base_dir.c_str(), &cfg);
      s != REID_OK) {
    return fail(s);
  }
  reid_result* result = nullptr;
  const reid_status status = reid_run(cfg, command.c_str(), &result);
  reid_config_free(cfg);
  if (result == nullptr) return fail(status);

  for (size_t i = 0; i < reid_result_warning_count(result); ++i) {
    std::cerr << "warning: " << reid_result_warning(result, i) << '\n';
  }
  std::cerr << reid_result_summary(result);

  int code = exit_code_for(status);
  if (opts.output.empty()) {
    std::cout << reid_result_output(result) << std::flush;
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    out << reid_result_output(result);
    if (!out) {
      std::cerr << "reid: cannot write '" << opts.output << "'\n";
      code = kExitRuntime;
    }
  }
  if (status != REID_OK) std::cerr << "reid: " << reid_last_error() << '\n';
  reid_result_free(result);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Re-identification risk assessment for survey-panel microdata"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(reid_version()));

  Options opts;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "JSON run configuration")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", opts.seed, "Random seed (overrides the config)");
    sub->add_option("--output", opts.output, "Write the result here instead of stdout");
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--threads", opts.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* prep = app.add_subcommand("prep", "Merge waves, filter respondents, estimate month of birth");
  auto* assess = app.add_subcommand("assess", "Listwise and n_match risk report");
  auto* simulate = app.add_subcommand("simulate", "Synthetic-population linking attack");
  auto* oracle = app.add_subcommand("oracle", "Check indexed n_match against the reference scan");
  for (auto* sub : {prep, assess, simulate, oracle}) add_common(sub);
  for (auto* sub : {assess, oracle}) {
    sub->add_flag("--require-observed-overlap", opts.require_observed_overlap,
                  "Ignore candidates sharing no observed variable with the probe");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (auto* sub : {prep, assess, simulate, oracle}) {
    if (sub->parsed()) return run(sub->get_name(), opts);
  }
  return kExitUsage;
}
