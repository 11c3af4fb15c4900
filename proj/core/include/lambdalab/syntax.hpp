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

#ifndef LAMBDALAB_SYNTAX_HPP
#define LAMBDALAB_SYNTAX_HPP

#include <string>
#include <string_view>

#include "lambdalab/term.hpp"

namespace lambdalab {

// Concrete syntax:
//   term   ::= lambda | app
//   lambda ::= ('\' | 'λ') var '.' term
//   app    ::= atom atom*            (left-associative)
//   atom   ::= var | '(' term ')'
//   var    ::= [A-Za-z][A-Za-z0-9_']*
// Whitespace between tokens is ignored. Throws SyntaxError.
Term parse(std::string_view text);

// Minimal parentheses, '\' for λ, single spaces between operands.
// parse(render(t)) is α-equivalent to t.
std::string render(const Term& t);

bool is_identifier(std::string_view name);

}  // namespace lambdalab

#endif  // LAMBDALAB_SYNTAX_HPP
