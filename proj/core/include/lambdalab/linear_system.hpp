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

#ifndef LAMBDALAB_LINEAR_SYSTEM_HPP
#define LAMBDALAB_LINEAR_SYSTEM_HPP

#include <vector>

#include "lambdalab/rational.hpp"

namespace lambdalab {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves A x = b exactly. Rows are scaled to integers and eliminated with
// Bareiss' fraction-free scheme, so every intermediate stays an integer and
// each division is exact. Throws SingularSystem if A is singular.
std::vector<Rational> solve_exact(const RationalMatrix& a,
                                  const std::vector<Rational>& b);

}  // namespace lambdalab

#endif  // LAMBDALAB_LINEAR_SYSTEM_HPP
