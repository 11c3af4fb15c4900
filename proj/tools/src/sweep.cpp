// Copyright 2026 The lambdalab Authors.
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

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "lambdalab/cli/commands.hpp"
#include "lambdalab/corpus.hpp"
#include "lambdalab/strategy.hpp"

namespace lambdalab::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string count_str(const std::optional<std::size_t>& n) {
  return n ? std::to_string(*n) : "div";
}

std::optional<std::size_t> parse_count(const std::string& s) {
  if (s == "div") return std::nullopt;
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad step count '" + s + "'");
  }
  return v;
}

// Splits one CSV record; handles quoted fields with doubled quotes.
std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV record");
  return fields;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

}  // namespace

std::vector<Probability> parse_grid(std::string_view text) {
  std::vector<Probability> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    grid.push_back(Probability::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<SweepRow> sweep(std::string_view term_id, const std::vector<Probability>& grid,
                            std::size_t fuel, std::size_t state_cap) {
  const Term t = resolve_term(term_id);
  const StepCount lo = n_steps(t, DeterministicStrategy::LeftmostOutermost, fuel);
  const StepCount ri = n_steps(t, DeterministicStrategy::RightmostInnermost, fuel);
  std::vector<SweepRow> rows;
  for (const auto& eps : grid) {
    const auto chain = analyze(t, Strategy::p_eps(eps), state_cap);
    SweepRow row;
    row.term_id = std::string(term_id);
    row.epsilon = eps;
    row.expected_length = chain.expected_length();
    row.expected_length_decimal =
        row.expected_length.is_finite() ? to_decimal(row.expected_length.value()) : "inf";
    row.termination_prob = chain.termination_probability();
    if (lo.is_finite()) row.n_lo = lo.steps();
    if (ri.is_finite()) row.n_ri = ri.steps();
    if (!eps.is_zero() && lo.is_finite()) {
      row.foster_bound = Rational(lo.steps()) / eps.value();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    std::string bound;
    if (r.foster_bound) {
      bound = to_string(*r.foster_bound);
    } else {
      bound = r.epsilon.is_zero() ? "inf" : "div";
    }
    out << csv_field(r.term_id) << ',' << r.epsilon.str() << ',' << r.expected_length.str() << ','
        << r.expected_length_decimal << ',' << to_string(r.termination_prob) << ','
        << count_str(r.n_lo) << ',' << count_str(r.n_ri) << ',' << bound << '\n';
  }
  return out.str();
}

std::vector<SweepRow> parse_sweep_csv(std::string_view csv) {
  const auto lines = split_lines(csv);
  if (lines.empty() || lines.front() != kSweepCsvHeader) {
    throw std::invalid_argument("missing or unexpected sweep CSV header");
  }
  std::vector<SweepRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_record(lines[i]);
    if (f.size() != 8) {
      throw std::invalid_argument("sweep CSV line " + std::to_string(i + 1) + " has " +
                                  std::to_string(f.size()) + " fields");
    }
    SweepRow r;
    r.term_id = f[0];
    r.epsilon = Probability::parse(f[1]);
    r.expected_length =
        f[2] == "inf" ? ExpectedLength::infinite() : ExpectedLength::finite(parse_rational(f[2]));
    r.expected_length_decimal = f[3];
    r.termination_prob = parse_rational(f[4]);
    r.n_lo = parse_count(f[5]);
    r.n_ri = parse_count(f[6]);
    if (f[7] != "inf" && f[7] != "div") r.foster_bound = parse_rational(f[7]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace lambdalab::cli
