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

#include "reid/reid.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "reid/anonymity.hpp"
#include "reid/commands.hpp"
#include "reid/config.hpp"
#include "reid/dataset.hpp"
#include "reid/error.hpp"
#include "reid/matching.hpp"
#include "reid/panel_prep.hpp"
#include "reid/risk.hpp"

struct reid_config {
  reid::RunConfig config;
};

struct reid_dataset {
  reid::Dataset data;
};

struct reid_result {
  reid::CommandOutput out;
};

namespace {

thread_local std::string last_error;

reid_status status_of(reid::ErrorCode code) {
  switch (code) {
    case reid::ErrorCode::kInvalidArgument: return REID_E_INVALID_ARGUMENT;
    case reid::ErrorCode::kConfig: return REID_E_CONFIG;
    case reid::ErrorCode::kIo: return REID_E_IO;
    case reid::ErrorCode::kParse: return REID_E_PARSE;
    case reid::ErrorCode::kInconsistentAges: return REID_E_INCONSISTENT_AGES;
    case reid::ErrorCode::kVerification: return REID_E_VERIFICATION;
    case reid::ErrorCode::kInternal: return REID_E_INTERNAL;
  }
  return REID_E_INTERNAL;
}

template <typename F>
reid_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return REID_OK;
  } catch (const reid::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return REID_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return REID_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return REID_E_INTERNAL;
  }
}

reid_status null_argument(const char* what) {
  last_error = std::string(what) + " must not be NULL";
  return REID_E_INVALID_ARGUMENT;
}

reid::QuasiIdentifier make_qi(const char* const* variables, size_t n) {
  if (variables == nullptr && n > 0) {
    throw reid::Error(reid::ErrorCode::kInvalidArgument, "variables must not be NULL");
  }
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) {
    if (variables[i] == nullptr) {
      throw reid::Error(reid::ErrorCode::kInvalidArgument, "variable name must not be NULL");
    }
    names.emplace_back(variables[i]);
  }
  return reid::QuasiIdentifier(std::move(names));
}

}  // namespace

extern "C" {

const char* reid_version(void) { return "1.0.0"; }

const char* reid_status_name(reid_status status) {
  switch (status) {
    case REID_OK: return "ok";
    case REID_E_INVALID_ARGUMENT: return "invalid argument";
    case REID_E_CONFIG: return "configuration error";
    case REID_E_IO: return "i/o error";
    case REID_E_PARSE: return "parse error";
    case REID_E_INCONSISTENT_AGES: return "inconsistent ages";
    case REID_E_VERIFICATION: return "verification failed";
    case REID_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* reid_last_error(void) { return last_error.c_str(); }

reid_status reid_config_parse(const char* json_text, const char* base_dir, reid_config** out) {
  if (json_text == nullptr) return null_argument("json_text");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<reid_config>();
    handle->config = reid::parse_run_config(json_text, base_dir ? base_dir : ".");
    *out = handle.release();
  });
}

void reid_config_free(reid_config* config) { delete config; }

reid_status reid_run(const reid_config* config, const char* command, reid_result** out) {
  if (config == nullptr) return null_argument("config");
  if (command == nullptr) return null_argument("command");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  bool verified = true;
  const reid_status status = guarded([&] {
    const std::string cmd = command;
    auto handle = std::make_unique<reid_result>();
    if (cmd == "prep") {
      handle->out = reid::run_prep(config->config);
    } else if (cmd == "assess") {
      handle->out = reid::run_assess(config->config);
    } else if (cmd == "simulate") {
      handle->out = reid::run_simulate(config->config);
    } else if (cmd == "oracle") {
      handle->out = reid::run_oracle(config->config);
    } else {
      throw reid::Error(reid::ErrorCode::kInvalidArgument, "unknown command '" + cmd + "'");
    }
    verified = handle->out.ok;
    *out = handle.release();
  });
  if (status == REID_OK && !verified) {
    last_error = "indexed n_match differs from the reference scan";
    return REID_E_VERIFICATION;
  }
  return status;
}

const char* reid_result_output(const reid_result* result) {
  return result ? result->out.output.c_str() : "";
}

const char* reid_result_summary(const reid_result* result) {
  return result ? result->out.summary.c_str() : "";
}

size_t reid_result_warning_count(const reid_result* result) {
  return result ? result->out.warnings.size() : 0;
}

const char* reid_result_warning(const reid_result* result, size_t index) {
  if (result == nullptr || index >= result->out.warnings.size()) return nullptr;
  return result->out.warnings[index].c_str();
}

void reid_result_free(reid_result* result) { delete result; }

reid_status reid_dataset_load_csv(const char* path, const reid_config* config,
                                  reid_dataset** out) {
  if (path == nullptr) return null_argument("path");
  if (config == nullptr) return null_argument("config");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<reid_dataset>();
    handle->data = reid::load_csv(path, config->config.schema, config->config.csv);
    *out = handle.release();
  });
}

void reid_dataset_free(reid_dataset* dataset) { delete dataset; }

size_t reid_dataset_num_rows(const reid_dataset* dataset) {
  return dataset ? dataset->data.num_rows() : 0;
}

size_t reid_dataset_num_variables(const reid_dataset* dataset) {
  return dataset ? dataset->data.num_variables() : 0;
}

const char* reid_dataset_id(const reid_dataset* dataset, size_t row) {
  if (dataset == nullptr || row >= dataset->data.num_rows()) return nullptr;
  return dataset->data.id(row).c_str();
}

reid_status reid_n_match(const reid_dataset* dataset, const char* const* variables,
                         size_t n_variables, int require_observed_overlap, size_t* counts_out) {
  if (dataset == nullptr) return null_argument("dataset");
  if (counts_out == nullptr) return null_argument("counts_out");
  return guarded([&] {
    reid::MatchOptions options;
    options.require_observed_overlap = require_observed_overlap != 0;
    const auto counts =
        reid::MatchIndex(dataset->data, make_qi(variables, n_variables)).count_all(options);
    std::copy(counts.begin(), counts.end(), counts_out);
  });
}

reid_status reid_n_match_reference(const reid_dataset* dataset, const char* const* variables,
                                   size_t n_variables, int require_observed_overlap,
                                   size_t* counts_out) {
  if (dataset == nullptr) return null_argument("dataset");
  if (counts_out == nullptr) return null_argument("counts_out");
  return guarded([&] {
    reid::MatchOptions options;
    options.require_observed_overlap = require_observed_overlap != 0;
    const auto counts =
        reid::n_match_reference(dataset->data, make_qi(variables, n_variables), options);
    std::copy(counts.begin(), counts.end(), counts_out);
  });
}

reid_status reid_k_sizes(const reid_dataset* dataset, const char* const* variables,
                         size_t n_variables, size_t* sizes_out) {
  if (dataset == nullptr) return null_argument("dataset");
  if (sizes_out == nullptr) return null_argument("sizes_out");
  return guarded([&] {
    const reid::QuasiIdentifier qi = make_qi(variables, n_variables);
    const auto deleted = reid::listwise_delete(dataset->data, qi);
    const auto sizes = reid::anonymity_set_sizes(deleted.remaining, qi);
    std::fill(sizes_out, sizes_out + dataset->data.num_rows(), size_t{0});
    for (size_t i = 0; i < deleted.kept_rows.size(); ++i) {
      sizes_out[deleted.kept_rows[i]] = sizes[i];
    }
  });
}

reid_status reid_theta(uint64_t n1, double n2, double pi, uint64_t min_n1, double* value,
                       int* defined, int* reliable) {
  if (value == nullptr || defined == nullptr || reliable == nullptr) {
    return null_argument("output pointers");
  }
  return guarded([&] {
    const auto t = reid::theta(n1, n2, pi, reid::ReliabilityPolicy{min_n1});
    *defined = t.value.has_value() ? 1 : 0;
    *value = t.value.value_or(0.0);
    *reliable = t.reliable ? 1 : 0;
  });
}

reid_status reid_estimate_birth_month(const int* years, const int* months, const int64_t* ages,
                                      const int* age_observed, size_t n, int* months_out,
                                      size_t* count_out) {
  if (n > 0 && (years == nullptr || months == nullptr || ages == nullptr ||
                age_observed == nullptr)) {
    return null_argument("input arrays");
  }
  if (months_out == nullptr || count_out == nullptr) return null_argument("output pointers");
  return guarded([&] {
    std::vector<reid::AgeObservation> history;
    for (size_t i = 0; i < n; ++i) {
      if (months[i] < 1 || months[i] > 12) {
        throw reid::Error(reid::ErrorCode::kInvalidArgument, "month out of range 1-12");
      }
      reid::AgeObservation obs{{years[i], months[i]}, std::nullopt};
      if (age_observed[i] != 0) obs.age = ages[i];
      history.push_back(obs);
    }
    const auto estimate = reid::estimate_birth_month(history);
    *count_out = estimate.size();
    for (size_t i = 0; i < estimate.size(); ++i) months_out[i] = estimate.candidates()[i];
  });
}

}  // extern "C"
