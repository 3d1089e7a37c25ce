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

// Generators and brute-force oracles shared by the unit and acceptance
// suites. The oracles work on decoded cell text only, so they stay
// independent of the dictionary codes and bitsets used by the library.

#ifndef REID_TESTS_TEST_SUPPORT_HPP_
#define REID_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reid/birth_month.hpp"
#include "reid/dataset.hpp"
#include "reid/quasi_identifier.hpp"

namespace reid::testing {

struct RandomDatasetParams {
  std::size_t max_rows = 200;
  std::size_t max_variables = 6;
  double max_missing_rate = 0.5;
  bool allow_birth_month = true;
  bool force_no_missing = false;
};

struct RandomDataset {
  Dataset data;
  std::vector<std::string> variables;  // all variable names, schema order
};

// Small domains so that collisions (and therefore non-trivial anonymity sets)
// are common.
inline RandomDataset random_dataset(std::mt19937_64& rng, const RandomDatasetParams& params) {
  std::uniform_int_distribution<std::size_t> rows_dist(1, params.max_rows);
  std::uniform_int_distribution<std::size_t> vars_dist(1, params.max_variables);
  std::uniform_real_distribution<double> rate_dist(0.0, params.max_missing_rate);
  const std::size_t n = rows_dist(rng);
  const std::size_t q = vars_dist(rng);

  std::vector<VariableSpec> schema;
  std::vector<int> domain;
  std::vector<double> missing_rate;
  for (std::size_t v = 0; v < q; ++v) {
    VariableSpec spec;
    spec.name = "v" + std::to_string(v);
    const int kind = std::uniform_int_distribution<int>(0, params.allow_birth_month ? 5 : 4)(rng);
    spec.kind = kind <= 2   ? VariableKind::kCategorical
                : kind <= 4 ? VariableKind::kInteger
                            : VariableKind::kBirthMonth;
    schema.push_back(spec);
    domain.push_back(std::uniform_int_distribution<int>(1, 6)(rng));
    missing_rate.push_back(params.force_no_missing ? 0.0 : rate_dist(rng));
  }

  DatasetBuilder builder(schema);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t r = 0; r < n; ++r) {
    builder.add_row("r" + std::to_string(r));
    for (std::size_t v = 0; v < q; ++v) {
      if (unit(rng) < missing_rate[v]) continue;
      const int value = std::uniform_int_distribution<int>(0, domain[v] - 1)(rng);
      switch (schema[v].kind) {
        case VariableKind::kCategorical:
          builder.set_label(v, "c" + std::to_string(value));
          break;
        case VariableKind::kInteger:
          builder.set_integer(v, 1900 + value);
          break;
        case VariableKind::kBirthMonth: {
          const int month = value % 12 + 1;
          if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            builder.set_months(v, BirthMonthEstimate(month));
          } else {
            builder.set_months(v, BirthMonthEstimate::around_change(month));
          }
          break;
        }
      }
    }
  }
  RandomDataset out{std::move(builder).build(), {}};
  for (const auto& spec : schema) out.variables.push_back(spec.name);
  return out;
}

// Months a decoded birth-month cell allows, parsed from "5/6"-style text.
inline std::vector<int> months_of(const std::string& text) {
  std::vector<int> months;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto slash = text.find('/', start);
    months.push_back(std::stoi(text.substr(start, slash - start)));
    if (slash == std::string::npos) break;
    start = slash + 1;
  }
  return months;
}

// Pairwise n_match: s counts for probe r when, on every qi variable where r is
// observed, s is missing or agrees with r. Birth months: r contributes its
// first candidate and s agrees when its candidates include it.
inline std::vector<std::size_t> brute_force_n_match(const Dataset& data,
                                                    const QuasiIdentifier& qi,
                                                    bool require_overlap = false) {
  std::vector<std::size_t> vars;
  for (const auto& name : qi.variables()) vars.push_back(data.variable_index(name));
  const std::size_t n = data.num_rows();
  std::vector<std::size_t> counts(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      bool match = true;
      bool overlap = false;
      bool probe_observed = false;
      for (std::size_t v : vars) {
        const std::string pr = data.format_cell(r, v);
        const std::string cs = data.format_cell(s, v);
        if (data.cell(r, v).is_missing()) continue;
        probe_observed = true;
        if (data.cell(s, v).is_missing()) continue;
        overlap = true;
        if (data.spec(v).kind == VariableKind::kBirthMonth) {
          const int probe = months_of(pr).front();
          const auto cand = months_of(cs);
          if (std::find(cand.begin(), cand.end(), probe) == cand.end()) match = false;
        } else if (pr != cs) {
          match = false;
        }
      }
      if (require_overlap && probe_observed && !overlap) match = false;
      if (match) ++counts[r];
    }
  }
  return counts;
}

// Pairwise anonymity-set sizes on fully observed rows (0 for rows with a
// missing qi cell).
inline std::vector<std::size_t> brute_force_k(const Dataset& data, const QuasiIdentifier& qi) {
  std::vector<std::size_t> vars;
  for (const auto& name : qi.variables()) vars.push_back(data.variable_index(name));
  const std::size_t n = data.num_rows();
  const auto complete = [&](std::size_t r) {
    return std::none_of(vars.begin(), vars.end(),
                        [&](std::size_t v) { return data.cell(r, v).is_missing(); });
  };
  std::vector<std::size_t> k(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (!complete(r)) continue;
    for (std::size_t s = 0; s < n; ++s) {
      if (!complete(s)) continue;
      const bool same = std::all_of(vars.begin(), vars.end(), [&](std::size_t v) {
        return data.format_cell(r, v) == data.format_cell(s, v);
      });
      if (same) ++k[r];
    }
  }
  return k;
}

// Calendar helpers for simulated panel membership.
struct Date {
  int year;
  int month;
  int day;
};

inline int age_on(const Date& birth, const Date& when) {
  int age = when.year - birth.year;
  if (when.month < birth.month || (when.month == birth.month && when.day < birth.day)) --age;
  return age;
}

inline bool before(const Date& a, const Date& b) {
  if (a.year != b.year) return a.year < b.year;
  if (a.month != b.month) return a.month < b.month;
  return a.day < b.day;
}

}  // namespace reid::testing

#endif  // REID_TESTS_TEST_SUPPORT_HPP_
