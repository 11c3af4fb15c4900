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

#ifndef LAMBDALAB_CLI_COMMANDS_HPP
#define LAMBDALAB_CLI_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambdalab/pars.hpp"
#include "lambdalab/rational.hpp"

namespace lambdalab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInconclusive = 2,
  kExitUsage = 3,
};

enum class Format { Text, Csv, Json };

Format parse_format(std::string_view text);

// Comma-separated epsilons, each "num/den", "0" or "1". Sorted ascending,
// duplicates removed.
std::vector<Probability> parse_grid(std::string_view text);

struct ReduceOptions {
  std::string term;
  std::string strategy = "lo";
  std::size_t fuel = kDefaultFuel;
  // Only used by peps strategies.
  std::uint64_t seed = 0;
  Format format = Format::Text;
};

struct AnalyzeOptions {
  std::string term;
  std::string eps = "1/2";
  std::size_t state_cap = kDefaultStateCap;
  Format format = Format::Text;
};

struct SweepOptions {
  std::string term;
  std::string grid = "1/10,1/4,1/2,3/4,9/10,1";
  std::size_t fuel = kDefaultFuel;
  std::size_t state_cap = kDefaultStateCap;
  Format format = Format::Csv;
};

struct MonteCarloOptions {
  std::string term;
  std::string eps = "1/2";
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  std::size_t max_steps = 10000;
  unsigned threads = 1;
  Format format = Format::Text;
};

struct LawsOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t size_cap = 12;
  std::size_t count = 200;
  // "default", "named" or "empty".
  std::string corpus = "default";
  Format format = Format::Text;
};

struct ReproOptions {
  std::uint64_t seed = 0;
  // Monte Carlo base seeds per term; 100 reproduces the full check.
  std::size_t mc_seeds = 100;
};

int cmd_reduce(const ReduceOptions& opts, std::ostream& out);
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out);
int cmd_sweep(const SweepOptions& opts, std::ostream& out);
int cmd_montecarlo(const MonteCarloOptions& opts, std::ostream& out);
int cmd_laws(const LawsOptions& opts, std::ostream& out);
int cmd_repro(const ReproOptions& opts, std::ostream& out);

// Full command line, including program name. Errors go to err; the return
// value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One line of an epsilon sweep.
struct SweepRow {
  std::string term_id;
  Probability epsilon;
  ExpectedLength expected_length = ExpectedLength::infinite();
  // 12 significant digits, or "inf".
  std::string expected_length_decimal;
  Rational termination_prob;
  // nullopt renders as "div".
  std::optional<std::size_t> n_lo;
  std::optional<std::size_t> n_ri;
  // N_LO/epsilon; nullopt renders as "inf" when epsilon is 0 and "div" when
  // LO ran out of fuel.
  std::optional<Rational> foster_bound;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline constexpr std::string_view kSweepCsvHeader =
    "term_id,epsilon,expected_length,expected_length_decimal,termination_prob,n_lo,n_ri,"
    "foster_bound";

std::vector<SweepRow> sweep(std::string_view term_id, const std::vector<Probability>& grid,
                            std::size_t fuel, std::size_t state_cap);

std::string sweep_csv(const std::vector<SweepRow>& rows);
// Inverse of sweep_csv. Throws std::invalid_argument on malformed input.
std::vector<SweepRow> parse_sweep_csv(std::string_view csv);

// Closed form (n-3)e^3 + 4e^2 + 2/e for the expected length of Mn:<n>.
// epsilon must be positive.
Rational mn_closed_form(std::size_t n, const Probability& epsilon);

}  // namespace lambdalab::cli

#endif  // LAMBDALAB_CLI_COMMANDS_HPP
