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

#include "lambdalab/term.hpp"

#include <cctype>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "lambdalab/errors.hpp"

namespace lambdalab {

Term Term::variable(std::string name) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Variable, std::move(name), Term(nullptr), Term(nullptr), 1}));
}

Term Term::abstraction(std::string binder, Term body) {
  const std::size_t size = 1 + body.size();
  return Term(std::make_shared<const Node>(
      Node{Kind::Abstraction, std::move(binder), std::move(body), Term(nullptr), size}));
}

Term Term::application(Term function, Term argument) {
  const std::size_t size = 1 + function.size() + argument.size();
  return Term(std::make_shared<const Node>(Node{Kind::Application, std::string{},
                                                std::move(function),
                                                std::move(argument), size}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable:
      return a.name() == b.name();
    case Term::Kind::Abstraction:
      return a.name() == b.name() && a.body() == b.body();
    case Term::Kind::Application:
      return a.function() == b.function() && a.argument() == b.argument();
  }
  return false;
}

Term var(std::string name) { return Term::variable(std::move(name)); }
Term lam(std::string binder, Term body) {
  return Term::abstraction(std::move(binder), std::move(body));
}
Term app(Term function, Term argument) {
  return Term::application(std::move(function), std::move(argument));
}

RedexPath RedexPath::child(Step step) const {
  auto steps = steps_;
  steps.push_back(step);
  return RedexPath(std::move(steps));
}

std::string RedexPath::str() const {
  if (steps_.empty()) return "root";
  std::string out;
  for (Step s : steps_) {
    switch (s) {
      case Step::IntoBody: out += 'b'; break;
      case Step::IntoFunction: out += 'f'; break;
      case Step::IntoArgument: out += 'a'; break;
    }
  }
  return out;
}

std::string to_string(SubCalculusTag tag) {
  switch (tag) {
    case SubCalculusTag::FullLambda: return "lambda";
    case SubCalculusTag::LambdaI: return "lambdaI";
    case SubCalculusTag::LambdaA: return "lambdaA";
    case SubCalculusTag::Both: return "lambdaIA";
  }
  return "?";
}

// --- free variables ---------------------------------------------------------

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      for (const auto& b : bound) {
        if (b == t.name()) return;
      }
      out.insert(t.name());
      return;
    case Term::Kind::Abstraction:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
    case Term::Kind::Application:
      collect_free(t.function(), bound, out);
      collect_free(t.argument(), bound, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

std::size_t free_occurrences(const Term& t, const std::string& x) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.name() == x ? 1 : 0;
    case Term::Kind::Abstraction:
      return t.name() == x ? 0 : free_occurrences(t.body(), x);
    case Term::Kind::Application:
      return free_occurrences(t.function(), x) + free_occurrences(t.argument(), x);
  }
  return 0;
}

bool is_free_in(const std::string& x, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.name() == x;
    case Term::Kind::Abstraction:
      return t.name() != x && is_free_in(x, t.body());
    case Term::Kind::Application:
      return is_free_in(x, t.function()) || is_free_in(x, t.argument());
  }
  return false;
}

// --- α-equivalence ------------------------------------------------------------

namespace {

// Binding depth of x counted from the innermost binder, or -1 if free.
long lookup(const std::vector<std::string_view>& env, std::string_view x) {
  for (std::size_t i = env.size(); i-- > 0;) {
    if (env[i] == x) return static_cast<long>(env.size() - 1 - i);
  }
  return -1;
}

bool alpha_eq_in(const Term& t, const Term& u, std::vector<std::string_view>& et,
                 std::vector<std::string_view>& eu) {
  if (t.kind() != u.kind()) return false;
  switch (t.kind()) {
    case Term::Kind::Variable: {
      const long dt = lookup(et, t.name());
      const long du = lookup(eu, u.name());
      if (dt != du) return false;
      return dt >= 0 || t.name() == u.name();
    }
    case Term::Kind::Abstraction: {
      et.push_back(t.name());
      eu.push_back(u.name());
      const bool eq = alpha_eq_in(t.body(), u.body(), et, eu);
      et.pop_back();
      eu.pop_back();
      return eq;
    }
    case Term::Kind::Application:
      return alpha_eq_in(t.function(), u.function(), et, eu) &&
             alpha_eq_in(t.argument(), u.argument(), et, eu);
  }
  return false;
}

}  // namespace

bool alpha_eq(const Term& t, const Term& u) {
  if (t.size() != u.size()) return false;
  std::vector<std::string_view> et, eu;
  return alpha_eq_in(t, u, et, eu);
}

// --- canonical encoding -------------------------------------------------------
//
//   L<body>            abstraction
//   @<fn><arg>         application
//   <k>;               bound variable, k = binding depth (0 = innermost)
//   '<name>;           free variable

namespace {

void encode(const Term& t, std::vector<std::string_view>& env, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      const long d = lookup(env, t.name());
      if (d >= 0) {
        out += std::to_string(d);
      } else {
        out += '\'';
        out += t.name();
      }
      out += ';';
      return;
    }
    case Term::Kind::Abstraction:
      out += 'L';
      env.push_back(t.name());
      encode(t.body(), env, out);
      env.pop_back();
      return;
    case Term::Kind::Application:
      out += '@';
      encode(t.function(), env, out);
      encode(t.argument(), env, out);
      return;
  }
}

class Decoder {
 public:
  explicit Decoder(const std::string& enc) : enc_(enc) {
    // Free names first, so that binder names can avoid them.
    for (std::size_t i = 0; i < enc_.size(); ++i) {
      if (enc_[i] == '\'') {
        const auto end = enc_.find(';', i);
        free_.insert(enc_.substr(i + 1, end - i - 1));
        i = end;
      }
    }
  }

  Term run() {
    Term t = term();
    if (pos_ != enc_.size()) throw Error("trailing data in canonical term");
    return t;
  }

 private:
  static constexpr std::string_view kPool[] = {"x", "y", "z", "w", "u", "v"};

  const std::string& binder_name(std::size_t depth) {
    while (names_.size() <= depth) {
      const std::size_t i = names_.size();
      std::string candidate = std::string(kPool[i % std::size(kPool)]);
      if (i >= std::size(kPool)) candidate += std::to_string(i / std::size(kPool));
      std::size_t bump = 0;
      std::string name = candidate;
      while (free_.count(name) != 0) name = candidate + "_" + std::to_string(++bump);
      names_.push_back(name);
    }
    return names_[depth];
  }

  Term term() {
    if (pos_ >= enc_.size()) throw Error("truncated canonical term");
    const char c = enc_[pos_];
    if (c == 'L') {
      ++pos_;
      const std::string name = binder_name(depth_);
      ++depth_;
      Term body = term();
      --depth_;
      return lam(name, std::move(body));
    }
    if (c == '@') {
      ++pos_;
      Term f = term();
      Term a = term();
      return app(std::move(f), std::move(a));
    }
    const auto end = enc_.find(';', pos_);
    if (end == std::string::npos) throw Error("malformed canonical term");
    if (c == '\'') {
      std::string name = enc_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return var(std::move(name));
    }
    const std::size_t index = std::stoul(enc_.substr(pos_, end - pos_));
    pos_ = end + 1;
    if (index >= depth_) throw Error("dangling index in canonical term");
    return var(binder_name(depth_ - 1 - index));
  }

  const std::string& enc_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::set<std::string> free_;
  std::vector<std::string> names_;
};

}  // namespace

CanonicalTerm canonicalize(const Term& t) {
  std::string out;
  out.reserve(t.size() * 3);
  std::vector<std::string_view> env;
  encode(t, env, out);
  return CanonicalTerm(std::move(out));
}

Term decode(const CanonicalTerm& c) { return Decoder(c.encoding_).run(); }

// --- substitution ---------------------------------------------------------------

namespace {

// One capture-avoiding substitution. Fresh names come from a counter local to
// this object, so results are reproducible.
class Substitution {
 public:
  Substitution(const std::string& x, const Term& arg)
      : x_(x), arg_(arg), arg_free_(free_vars(arg)) {}

  Term apply(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable:
        return t.name() == x_ ? arg_ : t;
      case Term::Kind::Application: {
        Term f = apply(t.function());
        Term a = apply(t.argument());
        return app(std::move(f), std::move(a));
      }
      case Term::Kind::Abstraction: {
        if (t.name() == x_ || !is_free_in(x_, t.body())) return t;
        if (arg_free_.count(t.name()) == 0) {
          return lam(t.name(), apply(t.body()));
        }
        const std::string z = fresh(t.name(), t.body());
        Term renamed = substitute(t.body(), t.name(), var(z));
        return lam(z, apply(renamed));
      }
    }
    return t;
  }

 private:
  std::string fresh(const std::string& base, const Term& body) {
    std::string stem = base;
    while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) {
      stem.pop_back();
    }
    if (stem.empty()) stem = "v";
    for (;;) {
      std::string candidate = stem + std::to_string(++counter_);
      if (candidate != x_ && arg_free_.count(candidate) == 0 &&
          !is_free_in(candidate, body)) {
        return candidate;
      }
    }
  }

  const std::string& x_;
  const Term& arg_;
  std::set<std::string> arg_free_;
  unsigned counter_ = 0;
};

}  // namespace

Term substitute(const Term& body, const std::string& x, const Term& arg) {
  return Substitution(x, arg).apply(body);
}

// --- redexes --------------------------------------------------------------------

namespace {

void collect_redexes(const Term& t, std::vector<Step>& path,
                     std::vector<RedexPath>& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return;
    case Term::Kind::Abstraction:
      path.push_back(Step::IntoBody);
      collect_redexes(t.body(), path, out);
      path.pop_back();
      return;
    case Term::Kind::Application:
      if (t.is_redex()) out.emplace_back(path);
      path.push_back(Step::IntoFunction);
      collect_redexes(t.function(), path, out);
      path.back() = Step::IntoArgument;
      collect_redexes(t.argument(), path, out);
      path.pop_back();
      return;
  }
}

const Term& step_into(const Term& t, Step s, const RedexPath& p) {
  switch (s) {
    case Step::IntoBody:
      if (t.is_abstraction()) return t.body();
      break;
    case Step::IntoFunction:
      if (t.is_application()) return t.function();
      break;
    case Step::IntoArgument:
      if (t.is_application()) return t.argument();
      break;
  }
  throw InvalidPath("path " + p.str() + " leaves the term");
}

Term rebuild(const Term& t, std::span<const Step> steps, const RedexPath& p) {
  if (steps.empty()) {
    if (!t.is_redex()) throw InvalidPath("path " + p.str() + " is not a redex");
    return substitute(t.function().body(), t.function().name(), t.argument());
  }
  const Step s = steps.front();
  const Term& child = step_into(t, s, p);
  Term replaced = rebuild(child, steps.subspan(1), p);
  switch (s) {
    case Step::IntoBody:
      return lam(t.name(), std::move(replaced));
    case Step::IntoFunction:
      return app(std::move(replaced), t.argument());
    case Step::IntoArgument:
      return app(t.function(), std::move(replaced));
  }
  return t;
}

const Term& redex_at(const Term& t, const RedexPath& p) {
  const Term& r = subterm_at(t, p);
  if (!r.is_redex()) throw InvalidPath("path " + p.str() + " is not a redex");
  return r;
}

}  // namespace

std::vector<RedexPath> redexes(const Term& t) {
  std::vector<RedexPath> out;
  std::vector<Step> path;
  collect_redexes(t, path, out);
  return out;
}

const Term& subterm_at(const Term& t, const RedexPath& p) {
  const Term* cur = &t;
  for (Step s : p.steps()) cur = &step_into(*cur, s, p);
  return *cur;
}

Term reduce_at(const Term& t, const RedexPath& p) { return rebuild(t, p.steps(), p); }

bool is_normal_form(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return true;
    case Term::Kind::Abstraction:
      return is_normal_form(t.body());
    case Term::Kind::Application:
      return !t.is_redex() && is_normal_form(t.function()) &&
             is_normal_form(t.argument());
  }
  return true;
}

bool is_anf_redex(const Term& t, const RedexPath& p) {
  return is_normal_form(redex_at(t, p).argument());
}

std::size_t multiplicity(const Term& t, const RedexPath& p) {
  const Term& fn = redex_at(t, p).function();
  return free_occurrences(fn.body(), fn.name());
}

// --- sub-calculi ----------------------------------------------------------------

bool is_lambda_I(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return true;
    case Term::Kind::Abstraction:
      return is_free_in(t.name(), t.body()) && is_lambda_I(t.body());
    case Term::Kind::Application:
      return is_lambda_I(t.function()) && is_lambda_I(t.argument());
  }
  return true;
}

bool is_lambda_A(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return true;
    case Term::Kind::Abstraction:
      return free_occurrences(t.body(), t.name()) <= 1 && is_lambda_A(t.body());
    case Term::Kind::Application:
      return is_lambda_A(t.function()) && is_lambda_A(t.argument());
  }
  return true;
}

SubCalculusTag classify(const Term& t) {
  const bool i = is_lambda_I(t);
  const bool a = is_lambda_A(t);
  if (i && a) return SubCalculusTag::Both;
  if (i) return SubCalculusTag::LambdaI;
  if (a) return SubCalculusTag::LambdaA;
  return SubCalculusTag::FullLambda;
}

bool satisfies(const Term& t, SubCalculusTag filter) {
  switch (filter) {
    case SubCalculusTag::FullLambda: return true;
    case SubCalculusTag::LambdaI: return is_lambda_I(t);
    case SubCalculusTag::LambdaA: return is_lambda_A(t);
    case SubCalculusTag::Both: return is_lambda_I(t) && is_lambda_A(t);
  }
  return false;
}

}  // namespace lambdalab
