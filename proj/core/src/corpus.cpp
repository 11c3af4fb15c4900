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

#include "lambdalab/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <vector>

#include "lambdalab/errors.hpp"
#include "lambdalab/montecarlo.hpp"
#include "lambdalab/syntax.hpp"

namespace lambdalab {

Term mk_I() { return lam("x", var("x")); }
Term mk_omega() { return lam("x", app(var("x"), var("x"))); }
Term mk_Omega() { return app(mk_omega(), mk_omega()); }

Term mk_Cn(std::size_t n) {
  if (n == 0) throw InvalidArity("C_n needs n >= 1");
  Term body = var("x");
  for (std::size_t i = 1; i < n; ++i) body = app(std::move(body), var("x"));
  return lam("x", std::move(body));
}

Term mk_Mn(std::size_t n) {
  if (n == 0) throw InvalidArity("M_n needs n >= 1");
  const Term b = lam("x", app(app(lam("y", var("z")), mk_Omega()), var("x")));
  const Term t = app(mk_Cn(n), app(mk_I(), var("y")));
  return app(b, t);
}

Term mk_example1() { return app(lam("x", var("y")), mk_Omega()); }
Term mk_example2() { return app(mk_omega(), app(mk_I(), mk_I())); }

namespace {

std::optional<std::size_t> parse_index(std::string_view digits) {
  std::size_t n = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, n);
  if (ec != std::errc() || ptr != end || digits.empty()) return std::nullopt;
  return n;
}

}  // namespace

std::optional<Term> named_term(std::string_view name) {
  if (name == "I") return mk_I();
  if (name == "omega") return mk_omega();
  if (name == "Omega") return mk_Omega();
  if (name == "example1") return mk_example1();
  if (name == "example2") return mk_example2();
  if (name.starts_with("Cn:") || name.starts_with("Mn:")) {
    const auto n = parse_index(name.substr(3));
    if (!n) throw InvalidArity("bad index in '" + std::string(name) + "'");
    return name[0] == 'C' ? mk_Cn(*n) : mk_Mn(*n);
  }
  return std::nullopt;
}

Term resolve_term(std::string_view name_or_literal) {
  if (auto t = named_term(name_or_literal)) return *t;
  return parse(name_or_literal);
}

// --- random generation ----------------------------------------------------------

namespace {

constexpr std::size_t kRetryBudget = 1000;
constexpr std::string_view kBinderNames[] = {"x", "y", "z", "w", "u", "v",
                                             "s", "t", "p", "q", "r"};
constexpr std::string_view kFreeNames[] = {"a", "b", "c"};

// Tree skeleton with unassigned variable leaves.
struct Shape {
  enum Kind { Leaf, Abs, App };
  struct Node {
    Kind kind;
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;

  int add(Kind k, int l = -1, int r = -1) {
    nodes.push_back({k, l, r});
    return static_cast<int>(nodes.size()) - 1;
  }
};

class Generator {
 public:
  Generator(std::uint64_t seed, SubCalculusTag filter) : rng_(seed), filter_(filter) {}

  std::optional<Term> attempt(std::size_t max_size) {
    shape_ = Shape{};
    // Upper half of the range; tiny terms are mostly normal forms.
    const std::size_t low = (max_size + 1) / 2;
    const std::size_t size = low + rng_.below(max_size - low + 1);
    const int root = grow(size);
    if (!assign(root)) return std::nullopt;
    return build(root);
  }

 private:
  int grow(std::size_t n) {
    if (n == 1) return shape_.add(Shape::Leaf);
    if (n == 2) return shape_.add(Shape::Abs, grow(1));
    if (rng_.below(3) == 0) return shape_.add(Shape::Abs, grow(n - 1));
    // Application: split the remaining n-1 nodes.
    const std::size_t left = 1 + rng_.below(n - 2);
    int fn;
    if (left >= 2 && rng_.below(2) == 0) {
      fn = shape_.add(Shape::Abs, grow(left - 1));
    } else {
      fn = grow(left);
    }
    const int arg = grow(n - 1 - left);
    return shape_.add(Shape::App, fn, arg);
  }

  // Walk the skeleton, recording each leaf's enclosing binders (outermost
  // first) and each binder's post-order rank.
  void index(int node, std::vector<int>& scope) {
    const auto& n = shape_.nodes[node];
    switch (n.kind) {
      case Shape::Leaf:
        leaf_scope_[node] = scope;
        leaves_.push_back(node);
        return;
      case Shape::Abs:
        scope.push_back(node);
        index(n.left, scope);
        scope.pop_back();
        binders_.push_back(node);  // post-order: inner binders first
        return;
      case Shape::App:
        index(n.left, scope);
        index(n.right, scope);
        return;
    }
  }

  bool assign(int root) {
    leaves_.clear();
    binders_.clear();
    leaf_scope_.assign(shape_.nodes.size(), {});
    leaf_target_.assign(shape_.nodes.size(), kUnassigned);
    uses_.assign(shape_.nodes.size(), 0);
    std::vector<int> scope;
    index(root, scope);

    const bool need_use = filter_ == SubCalculusTag::LambdaI || filter_ == SubCalculusTag::Both;
    const bool at_most_once = filter_ == SubCalculusTag::LambdaA || filter_ == SubCalculusTag::Both;

    if (need_use) {
      // Bodies form a laminar family, so serving inner binders first never
      // blocks an outer binder that could otherwise be served.
      for (int b : binders_) {
        std::vector<int> candidates;
        for (int leaf : leaves_) {
          if (leaf_target_[leaf] != kUnassigned) continue;
          const auto& s = leaf_scope_[leaf];
          if (std::find(s.begin(), s.end(), b) != s.end()) candidates.push_back(leaf);
        }
        if (candidates.empty()) return false;
        const int leaf = candidates[rng_.below(candidates.size())];
        leaf_target_[leaf] = b;
        ++uses_[b];
      }
    }

    for (int leaf : leaves_) {
      if (leaf_target_[leaf] != kUnassigned) continue;
      std::vector<int> options;
      for (int b : leaf_scope_[leaf]) {
        if (at_most_once && uses_[b] > 0) continue;
        options.push_back(b);
      }
      // Free variables only when nothing is in scope or with probability 1/4.
      if (options.empty() || rng_.below(4) == 0) {
        leaf_target_[leaf] = kFree - static_cast<int>(rng_.below(std::size(kFreeNames)));
      } else {
        const int b = options[rng_.below(options.size())];
        leaf_target_[leaf] = b;
        ++uses_[b];
      }
    }
    return true;
  }

  std::string binder_name(int node) const {
    const auto it = std::find(binders_.begin(), binders_.end(), node);
    // Outer binders get the early names.
    const std::size_t rank = binders_.size() - 1 - static_cast<std::size_t>(it - binders_.begin());
    std::string name(kBinderNames[rank % std::size(kBinderNames)]);
    if (rank >= std::size(kBinderNames)) name += std::to_string(rank / std::size(kBinderNames));
    return name;
  }

  Term build(int node) const {
    const auto& n = shape_.nodes[node];
    switch (n.kind) {
      case Shape::Leaf: {
        const int target = leaf_target_[node];
        if (target <= kFree) return var(std::string(kFreeNames[kFree - target]));
        return var(binder_name(target));
      }
      case Shape::Abs:
        return lam(binder_name(node), build(n.left));
      case Shape::App:
        return app(build(n.left), build(n.right));
    }
    return var("a");
  }

  static constexpr int kUnassigned = -1;
  static constexpr int kFree = -2;  // kFree - k encodes free name k

  RandomStream rng_;
  SubCalculusTag filter_;
  Shape shape_;
  std::vector<int> leaves_;
  std::vector<int> binders_;
  std::vector<std::vector<int>> leaf_scope_;
  std::vector<int> leaf_target_;
  std::vector<int> uses_;
};

}  // namespace

Term random_term(std::uint64_t seed, std::size_t max_size, SubCalculusTag filter) {
  if (max_size == 0) throw InvalidArity("random_term needs max_size >= 1");
  Generator gen(seed, filter);
  for (std::size_t i = 0; i < kRetryBudget; ++i) {
    if (auto t = gen.attempt(max_size)) {
      if (satisfies(*t, filter)) return *t;
    }
  }
  throw GenerationExhausted("no " + to_string(filter) + " term of size <= " +
                            std::to_string(max_size) + " for seed " +
                            std::to_string(seed));
}

}  // namespace lambdalab
