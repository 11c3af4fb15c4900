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

#ifndef LAMBDALAB_ERRORS_HPP
#define LAMBDALAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambdalab {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A RedexPath that does not address a β-redex of the term it is applied to.
class InvalidPath : public Error {
 public:
  using Error::Error;
};

class InvalidArity : public Error {
 public:
  using Error::Error;
};

class InvalidProbability : public Error {
 public:
  using Error::Error;
};

class InvalidEpsilon : public Error {
 public:
  using Error::Error;
};

class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

// Raised by the exact solver; only reachable through a malformed chain.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

class StateCapExceeded : public Error {
 public:
  StateCapExceeded(std::size_t state_cap, std::size_t frontier_size)
      : Error("state cap of " + std::to_string(state_cap) +
              " exceeded with " + std::to_string(frontier_size) +
              " states still on the frontier"),
        state_cap_(state_cap),
        frontier_size_(frontier_size) {}

  std::size_t state_cap() const noexcept { return state_cap_; }
  std::size_t frontier_size() const noexcept { return frontier_size_; }

 private:
  std::size_t state_cap_;
  std::size_t frontier_size_;
};

}  // namespace lambdalab

#endif  // LAMBDALAB_ERRORS_HPP
