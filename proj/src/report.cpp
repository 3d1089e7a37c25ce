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

#include "reid/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "reid/csv.hpp"

namespace reid {
namespace {

using nlohmann::json;
using Row = std::vector<std::string>;

constexpr const char* kUnreliable = "\xE2\x88\x92";  // U+2212 minus sign

// Display width in code points (the tables only use narrow characters).
std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++width;
  }
  return width;
}

void write_table(std::ostringstream& out, const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = display_width(header[c]);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], display_width(row[c]));
    }
  }
  const auto emit = [&](const Row& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(widths[c] - display_width(row[c]), ' ');
      if (c == 0) {
        out << row[c] << pad;  // labels left-aligned
      } else {
        out << "  " << pad << row[c];
      }
    }
    out << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (std::size_t w : widths) total += w;
  total += 2 * (widths.size() - 1);
  out << std::string(total, '-') << '\n';
  for (const auto& row : rows) emit(row);
}

std::string theta_text(const ThetaEstimate& t) {
  if (!t.reliable || !t.value) return kUnreliable;
  return format_fixed(*t.value);
}

json theta_json(const ThetaEstimate& t) {
  return {{"value", t.value ? json(*t.value) : json(nullptr)},
          {"n1", t.n1},
          {"n2", t.n2},
          {"pi", t.pi},
          {"reliable", t.reliable}};
}

json record_json(const RiskRecord& rec) {
  json j;
  j["quasi_identifier"] = rec.qi.label();
  j["variables"] = rec.qi.variables();
  j["method"] = std::string(to_string(rec.method));
  if (rec.listwise) {
    const KProfile& k = *rec.listwise;
    j["n_deleted"] = k.n_deleted;
    j["n"] = k.n_remaining;
    j["k_eq_1"] = k.n_unique;
    j["k_le_5"] = k.respondents_k_le.at(5);
    j["k_le_10"] = k.respondents_k_le.at(10);
    j["n_pairs"] = k.n_pairs;
    json hist = json::object();
    for (const auto& [size, count] : k.k_histogram) hist[std::to_string(size)] = count;
    j["k_histogram"] = hist;
    j["pr_su_new"] = k.pr_su_new;
    j["pr_su_full"] = k.pr_su_full;
  }
  if (rec.match) {
    const MatchProfile& m = *rec.match;
    j["n"] = m.counts.size();
    j["n_match_eq_1"] = m.n_unique;
    j["n_match_le_5"] = m.respondents_le.at(5);
    j["n_match_le_10"] = m.respondents_le.at(10);
    j["n_match_eq_2"] = m.rows_at_two;
    j["n2_equivalent"] = m.n2_equivalent;
    j["pr_su"] = m.pr_su;
  }
  j["theta"] = theta_json(rec.theta);
  return j;
}

std::string number(double v) { return json(v).dump(); }

std::string render_text(const RiskReport& report) {
  std::ostringstream out;
  std::vector<Row> listwise;
  std::vector<Row> match;
  for (const auto& rec : report.records) {
    if (rec.listwise) {
      const KProfile& k = *rec.listwise;
      listwise.push_back({rec.qi.label(), std::to_string(k.n_deleted),
                          std::to_string(k.n_remaining), std::to_string(k.n_unique),
                          std::to_string(k.respondents_k_le.at(5)),
                          std::to_string(k.respondents_k_le.at(10)), format_fixed(k.pr_su_new),
                          format_fixed(k.pr_su_full), theta_text(rec.theta)});
    }
    if (rec.match) {
      const MatchProfile& m = *rec.match;
      match.push_back({rec.qi.label(), std::to_string(m.n_unique),
                       std::to_string(m.respondents_le.at(5)),
                       std::to_string(m.respondents_le.at(10)), format_fixed(m.pr_su),
                       theta_text(rec.theta)});
    }
  }
  out << "n_full = " << report.n_full << ", N = " << report.population << "\n";
  if (!listwise.empty()) {
    out << "\nNumber of respondents per anonymity set size k (listwise deletion)\n\n";
    write_table(out,
                {"Quasi-Identifier", "n_deleted", "n", "k = 1", "k \xE2\x89\xA4 5",
                 "k \xE2\x89\xA4 10", "Pr(SU)_new", "Pr(SU)_full", "\xCE\xB8"},
                listwise);
  }
  if (!match.empty()) {
    out << "\nFrequencies of n_match\n\n";
    write_table(out,
                {"Quasi-identifier", "n_match = 1", "n_match \xE2\x89\xA4 5",
                 "n_match \xE2\x89\xA4 10", "Pr(SU)", "\xCE\xB8"},
                match);
  }
  return out.str();
}

std::string render_csv(const RiskReport& report) {
  std::ostringstream out;
  csv::write_record(out, {"quasi_identifier", "method", "n_deleted", "n", "eq_1", "le_5",
                          "le_10", "pr_su_new", "pr_su_full", "pr_su", "theta",
                          "theta_reliable"});
  for (const auto& rec : report.records) {
    Row row = {rec.qi.label(), std::string(to_string(rec.method))};
    if (rec.listwise) {
      const KProfile& k = *rec.listwise;
      row.insert(row.end(), {std::to_string(k.n_deleted), std::to_string(k.n_remaining),
                             std::to_string(k.n_unique), std::to_string(k.respondents_k_le.at(5)),
                             std::to_string(k.respondents_k_le.at(10)), number(k.pr_su_new),
                             number(k.pr_su_full), ""});
    } else {
      const MatchProfile& m = *rec.match;
      row.insert(row.end(), {"0", std::to_string(m.counts.size()), std::to_string(m.n_unique),
                             std::to_string(m.respondents_le.at(5)),
                             std::to_string(m.respondents_le.at(10)), "", "", number(m.pr_su)});
    }
    row.push_back(rec.theta.value ? number(*rec.theta.value) : "");
    row.push_back(rec.theta.reliable ? "true" : "false");
    csv::write_record(out, row);
  }
  return out.str();
}

json attack_json(const AttackResult& r) {
  return {{"draws", r.draws},
          {"sample_size", r.sample_size},
          {"unique_matches", r.unique_matches},
          {"correct_unique_matches", r.correct_unique_matches},
          {"empirical_theta", r.empirical_theta ? json(*r.empirical_theta) : json(nullptr)},
          {"predicted_theta", theta_json(r.predicted_theta)}};
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string render_report(const RiskReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return render_text(report);
    case OutputFormat::kCsv:
      return render_csv(report);
    case OutputFormat::kJson: {
      json j;
      j["n_full"] = report.n_full;
      j["population_size"] = report.population;
      j["records"] = json::array();
      for (const auto& rec : report.records) j["records"].push_back(record_json(rec));
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_simulation(const SimulationSummary& summary, const SimulationConfig& config,
                              OutputFormat format) {
  json replicates = json::array();
  for (std::size_t i = 0; i < summary.replicates.size(); ++i) {
    json r = attack_json(summary.replicates[i]);
    r["replicate"] = i;
    replicates.push_back(r);
  }
  json aggregate = {
      {"draws", summary.draws},
      {"unique_matches", summary.unique_matches},
      {"correct_unique_matches", summary.correct_unique_matches},
      {"pooled_empirical_theta",
       summary.pooled_empirical_theta ? json(*summary.pooled_empirical_theta) : json(nullptr)},
      {"mean_predicted_theta",
       summary.mean_predicted_theta ? json(*summary.mean_predicted_theta) : json(nullptr)}};
  if (summary.pooled_empirical_theta && summary.mean_predicted_theta) {
    aggregate["absolute_difference"] =
        *summary.pooled_empirical_theta - *summary.mean_predicted_theta;
  }

  if (format == OutputFormat::kJson) {
    json variables = json::array();
    for (const auto& v : config.population.variables) {
      variables.push_back({{"name", v.name}, {"categories", v.categories}, {"weights", v.weights}});
    }
    json j = {{"population_size", config.population.size},
              {"variables", variables},
              {"sampling_fraction", config.sampling_fraction},
              {"missing_rate", config.missing_rate},
              {"seed", config.seed},
              {"replicates", replicates},
              {"aggregate", aggregate}};
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    csv::write_record(out, {"replicate", "draws", "sample_size", "unique_matches",
                            "correct_unique_matches", "empirical_theta", "predicted_theta",
                            "predicted_reliable"});
    for (std::size_t i = 0; i < summary.replicates.size(); ++i) {
      const auto& r = summary.replicates[i];
      csv::write_record(out, {std::to_string(i), std::to_string(r.draws),
                              std::to_string(r.sample_size), std::to_string(r.unique_matches),
                              std::to_string(r.correct_unique_matches),
                              r.empirical_theta ? number(*r.empirical_theta) : "",
                              r.predicted_theta.value ? number(*r.predicted_theta.value) : "",
                              r.predicted_theta.reliable ? "true" : "false"});
    }
    return out.str();
  }

  std::vector<Row> rows;
  for (std::size_t i = 0; i < summary.replicates.size(); ++i) {
    const auto& r = summary.replicates[i];
    rows.push_back({std::to_string(i), std::to_string(r.sample_size), std::to_string(r.draws),
                    std::to_string(r.unique_matches), std::to_string(r.correct_unique_matches),
                    r.empirical_theta ? format_fixed(*r.empirical_theta) : kUnreliable,
                    r.predicted_theta.value ? format_fixed(*r.predicted_theta.value)
                                            : kUnreliable});
  }
  write_table(out, {"replicate", "n", "draws", "unique", "correct", "empirical \xCE\xB8",
                    "predicted \xCE\xB8"},
              rows);
  out << "\npooled empirical \xCE\xB8: "
      << (summary.pooled_empirical_theta ? format_fixed(*summary.pooled_empirical_theta)
                                         : kUnreliable)
      << "\nmean predicted \xCE\xB8:  "
      << (summary.mean_predicted_theta ? format_fixed(*summary.mean_predicted_theta)
                                       : kUnreliable)
      << '\n';
  return out.str();
}

}  // namespace reid
