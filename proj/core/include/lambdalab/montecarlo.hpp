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

#ifndef LAMBDALAB_MONTECARLO_HPP
#define LAMBDALAB_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "lambdalab/strategy.hpp"
#include "lambdalab/term.hpp"

namespace lambdalab {

// Pseudo-random stream used by every sampler in the library: std::mt19937_64
// seeded with splitmix64(seed). Both are fully specified, so a seed yields
// the same stream on every platform. Changing this breaks golden tests.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next();
  // Uniform integer in [0, bound), bound > 0, by rejection sampling.
  std::uint64_t below(std::uint64_t bound);
  // True with probability exactly num/den, compared on integers.
  bool bernoulli(const Probability& p);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct RunResult {
  StepCount steps = StepCount::finite(0);
  // Normal form reached; nullopt when the run was cut off.
  std::optional<CanonicalTerm> final_state;
  std::uint64_t seed = 0;

  bool cutoff() const noexcept { return !final_state.has_value(); }
};

// Samples one trajectory. Throws InvalidProbability if ε's denominator does
// not fit in 64 bits.
RunResult sample_run(const Term& t, const Strategy& strategy, std::uint64_t seed,
                     std::size_t max_steps);

struct Estimate {
  std::size_t sample_count = 0;
  std::size_t cutoff_count = 0;
  // Over non-cutoff runs.
  double mean = 0.0;
  double sample_variance = 0.0;
  double confidence_halfwidth_95 = 0.0;
};

// Runs seeds base_seed .. base_seed+n-1. `threads` = 0 picks the hardware
// concurrency; the result does not depend on it.
Estimate estimate(const Term& t, const Strategy& strategy, std::uint64_t base_seed,
                  std::size_t n, std::size_t max_steps, unsigned threads = 1);

}  // namespace lambdalab

#endif  // LAMBDALAB_MONTECARLO_HPP
