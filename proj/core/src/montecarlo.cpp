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

#include "lambdalab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "lambdalab/errors.hpp"

namespace lambdalab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

std::uint64_t RandomStream::next() { return engine_(); }

std::uint64_t RandomStream::below(std::uint64_t bound) {
  // Reject the low (2^64 mod bound) values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

namespace {

struct Threshold {
  std::uint64_t numerator;
  std::uint64_t denominator;
};

Threshold to_threshold(const Probability& p) {
  const Integer num = p.numerator();
  const Integer den = p.denominator();
  if (den > std::numeric_limits<std::uint64_t>::max()) {
    throw InvalidProbability("denominator of " + p.str() + " does not fit in 64 bits");
  }
  return {num.convert_to<std::uint64_t>(), den.convert_to<std::uint64_t>()};
}

bool draw(RandomStream& rng, const Threshold& t) {
  if (t.numerator == 0) return false;
  if (t.numerator == t.denominator) return true;
  return rng.below(t.denominator) < t.numerator;
}

RunResult run_with(const Term& t, const Threshold& eps, std::uint64_t seed,
                   std::size_t max_steps) {
  RandomStream rng(seed);
  Term cur = t;
  for (std::size_t n = 0;; ++n) {
    const auto lo = lo_redex(cur);
    if (!lo) return {StepCount::finite(n), canonicalize(cur), seed};
    if (n == max_steps) return {StepCount::fuel_exhausted(max_steps), std::nullopt, seed};
    const auto ri = ri_redex(cur);
    const RedexPath& chosen = (*lo == *ri || draw(rng, eps)) ? *lo : *ri;
    cur = reduce_at(cur, chosen);
  }
}

struct Tally {
  std::size_t runs = 0;
  std::size_t cutoffs = 0;
  Integer sum = 0;
  Integer sum_squares = 0;
};

Tally tally_range(const Term& t, const Threshold& eps, std::uint64_t first, std::size_t count,
                  std::size_t max_steps) {
  Tally out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto r = run_with(t, eps, first + k, max_steps);
    ++out.runs;
    if (r.cutoff()) {
      ++out.cutoffs;
      continue;
    }
    const auto steps = static_cast<unsigned long>(r.steps.steps());
    out.sum += steps;
    out.sum_squares += Integer(steps) * steps;
  }
  return out;
}

}  // namespace

bool RandomStream::bernoulli(const Probability& p) { return draw(*this, to_threshold(p)); }

RunResult sample_run(const Term& t, const Strategy& strategy, std::uint64_t seed,
                     std::size_t max_steps) {
  return run_with(t, to_threshold(strategy.epsilon()), seed, max_steps);
}

Estimate estimate(const Term& t, const Strategy& strategy, std::uint64_t base_seed,
                  std::size_t n, std::size_t max_steps, unsigned threads) {
  const Threshold eps = to_threshold(strategy.epsilon());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  // Integer tallies make the reduction independent of the chunking.
  std::vector<Tally> tallies(threads);
  if (threads == 1) {
    tallies[0] = tally_range(t, eps, base_seed, n, max_steps);
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = std::min(n, w * chunk);
      const std::size_t count = std::min(n, begin + chunk) - begin;
      workers.emplace_back([&, w, begin, count] {
        tallies[w] = tally_range(t, eps, base_seed + begin, count, max_steps);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  Tally total;
  for (const auto& part : tallies) {
    total.runs += part.runs;
    total.cutoffs += part.cutoffs;
    total.sum += part.sum;
    total.sum_squares += part.sum_squares;
  }

  Estimate e;
  e.sample_count = total.runs;
  e.cutoff_count = total.cutoffs;
  const std::size_t m = total.runs - total.cutoffs;
  if (m == 0) {
    e.mean = std::numeric_limits<double>::quiet_NaN();
    e.sample_variance = std::numeric_limits<double>::quiet_NaN();
    e.confidence_halfwidth_95 = std::numeric_limits<double>::quiet_NaN();
    return e;
  }
  const Rational mean(total.sum, Integer(static_cast<unsigned long>(m)));
  e.mean = mean.convert_to<double>();
  if (m > 1) {
    const Rational ss = Rational(total.sum_squares) - Rational(total.sum) * mean;
    e.sample_variance = (ss / Rational(static_cast<unsigned long>(m - 1))).convert_to<double>();
  }
  e.confidence_halfwidth_95 = 1.96 * std::sqrt(e.sample_variance / static_cast<double>(m));
  return e;
}

}  // namespace lambdalab
