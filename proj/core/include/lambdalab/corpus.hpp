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

#ifndef LAMBDALAB_CORPUS_HPP
#define LAMBDALAB_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lambdalab/term.hpp"

namespace lambdalab {

// λx.x
Term mk_I();
// ω = λx.x x
Term mk_omega();
// Ω = ω ω
Term mk_Omega();
// C_n = λx.x x ... x with n occurrences of x. Throws InvalidArity for n = 0.
Term mk_Cn(std::size_t n);
// M_n = B T_n where B = λx.((λy.z) Ω) x and T_n = C_n ((λx.x) y).
Term mk_Mn(std::size_t n);
// (λx.y) Ω
Term mk_example1();
// (λx.x x) (I I)
Term mk_example2();

// example1, example2, Cn:<n>, Mn:<n>. Returns nullopt for anything else; a
// Cn:/Mn: prefix with a malformed or zero index throws InvalidArity.
// example1, example2, Cn:<n>, Mn:<n>. Returns nullopt for anything else.
std::optional<Term> named_term(std::string_view name);

// Resolves a name via named_term, falling back to parsing a term literal.
Term resolve_term(std::string_view name_or_literal);

/// Seeded random term generator.
///
/// The result has at most `max_size` nodes and satisfies `filter`. Shapes are
/// drawn first; variable leaves are then assigned with explicit bookkeeping of
/// binder occurrences so that λI (every binder used) and λA (every binder used
/// at most once) hold by construction. Function positions are biased towards
/// abstractions so that generated terms contain redexes.
///
/// Deterministic in (seed, max_size, filter). Throws GenerationExhausted if
/// no term is found within the retry budget.
Term random_term(std::uint64_t seed, std::size_t max_size, SubCalculusTag filter);

}  // namespace lambdalab

#endif  // LAMBDALAB_CORPUS_HPP
