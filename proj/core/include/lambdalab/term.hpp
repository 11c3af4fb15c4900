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

#ifndef LAMBDALAB_TERM_HPP
#define LAMBDALAB_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace lambdalab {

// Immutable λ-term with named binders. Copies share structure.
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Abstraction, Application };

  static Term variable(std::string name);
  static Term abstraction(std::string binder, Term body);
  static Term application(Term function, Term argument);

  Kind kind() const noexcept;
  bool is_variable() const noexcept { return kind() == Kind::Variable; }
  bool is_abstraction() const noexcept { return kind() == Kind::Abstraction; }
  bool is_application() const noexcept { return kind() == Kind::Application; }
  // (λx.M)N
  bool is_redex() const noexcept;

  // Variable name, or binder name of an abstraction.
  const std::string& name() const noexcept;
  const Term& body() const noexcept;
  const Term& function() const noexcept;
  const Term& argument() const noexcept;

  // Number of nodes.
  std::size_t size() const noexcept;

  // Syntactic identity, binder names included. See alpha_eq for α-classes.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Term var(std::string name);
Term lam(std::string binder, Term body);
Term app(Term function, Term argument);
// Left-associated application: app(a, b, c) = (a b) c.
template <typename... Rest>
Term app(Term function, Term argument, Rest... rest) {
  return app(app(std::move(function), std::move(argument)), std::move(rest)...);
}

enum class Step : std::uint8_t { IntoBody, IntoFunction, IntoArgument };

// Root-to-node address of a subterm; identifies the hole of a context.
class RedexPath {
 public:
  RedexPath() = default;
  explicit RedexPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::span<const Step> steps() const noexcept { return steps_; }
  bool is_root() const noexcept { return steps_.empty(); }
  std::size_t depth() const noexcept { return steps_.size(); }
  RedexPath child(Step step) const;

  // "root", or one letter per step: b(ody), f(unction), a(rgument).
  std::string str() const;

  friend bool operator==(const RedexPath&, const RedexPath&) = default;

 private:
  std::vector<Step> steps_;
};

// Binder-name-independent encoding of a term: bound variables become binding
// depths, free variables keep their names. Two terms canonicalize to the same
// value exactly when they are α-equivalent.
class CanonicalTerm {
 public:
  CanonicalTerm() = default;

  const std::string& encoding() const noexcept { return encoding_; }

  friend bool operator==(const CanonicalTerm& a, const CanonicalTerm& b) {
    return a.encoding_ == b.encoding_;
  }
  friend bool operator<(const CanonicalTerm& a, const CanonicalTerm& b) {
    return a.encoding_ < b.encoding_;
  }

 private:
  friend CanonicalTerm canonicalize(const Term& t);
  friend Term decode(const CanonicalTerm& c);
  explicit CanonicalTerm(std::string encoding) : encoding_(std::move(encoding)) {}
  std::string encoding_;
};

enum class SubCalculusTag : std::uint8_t { FullLambda, LambdaI, LambdaA, Both };

std::string to_string(SubCalculusTag tag);

std::set<std::string> free_vars(const Term& t);
bool is_free_in(const std::string& x, const Term& t);
// Free occurrences of x in t, counted with multiplicity.
std::size_t free_occurrences(const Term& t, const std::string& x);

bool alpha_eq(const Term& t, const Term& u);
CanonicalTerm canonicalize(const Term& t);
// Inverse of canonicalize up to α: picks fresh binder names that avoid every
// free variable of the encoded term.
Term decode(const CanonicalTerm& c);

// Capture-avoiding substitution body{arg/x}.
Term substitute(const Term& body, const std::string& x, const Term& arg);

// All β-redexes in pre-order (node, then function, then argument). The first
// entry is the leftmost-outermost redex, the last the rightmost-innermost.
std::vector<RedexPath> redexes(const Term& t);

const Term& subterm_at(const Term& t, const RedexPath& p);
// Contracts the redex at p; throws InvalidPath if p does not address one.
Term reduce_at(const Term& t, const RedexPath& p);

bool is_normal_form(const Term& t);
// True iff the argument of the redex at p is in normal form.
bool is_anf_redex(const Term& t, const RedexPath& p);
// Free occurrences of the redex's binder in the redex's body.
std::size_t multiplicity(const Term& t, const RedexPath& p);

// Every binder occurs free in its body.
bool is_lambda_I(const Term& t);
// Every binder occurs free at most once in its body.
bool is_lambda_A(const Term& t);
SubCalculusTag classify(const Term& t);
bool satisfies(const Term& t, SubCalculusTag filter);

// --- implementation details -------------------------------------------------

struct Term::Node {
  Kind kind;
  std::string name;
  Term left;   // body of an abstraction, function of an application
  Term right;  // argument of an application
  std::size_t size;
};

inline Term::Kind Term::kind() const noexcept { return node_->kind; }
inline const std::string& Term::name() const noexcept { return node_->name; }
inline const Term& Term::body() const noexcept { return node_->left; }
inline const Term& Term::function() const noexcept { return node_->left; }
inline const Term& Term::argument() const noexcept { return node_->right; }
inline std::size_t Term::size() const noexcept { return node_->size; }
inline bool Term::is_redex() const noexcept {
  return is_application() && function().is_abstraction();
}

}  // namespace lambdalab

template <>
struct std::hash<lambdalab::CanonicalTerm> {
  std::size_t operator()(const lambdalab::CanonicalTerm& c) const noexcept {
    return std::hash<std::string>{}(c.encoding());
  }
};

#endif  // LAMBDALAB_TERM_HPP
