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

#include "lambdalab/syntax.hpp"

#include <cctype>
#include <vector>

#include "lambdalab/errors.hpp"

namespace lambdalab {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_continue(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term run() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  static constexpr std::string_view kLambdaUtf8 = "\xCE\xBB";

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_lambda() const {
    if (pos_ >= text_.size()) return false;
    return text_[pos_] == '\\' || text_.substr(pos_, kLambdaUtf8.size()) == kLambdaUtf8;
  }

  bool at_atom() const {
    return pos_ < text_.size() && (text_[pos_] == '(' || ident_start(text_[pos_]));
  }

  std::string identifier() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected a variable");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_continue(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term() {
    skip_ws();
    if (at_lambda()) {
      pos_ += text_[pos_] == '\\' ? 1 : kLambdaUtf8.size();
      std::string binder = identifier();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '.') fail("expected '.'");
      ++pos_;
      return lam(std::move(binder), term());
    }
    Term head = atom();
    for (;;) {
      skip_ws();
      if (!at_atom()) break;
      head = app(std::move(head), atom());
    }
    return head;
  }

  Term atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      Term inner = term();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    return var(identifier());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      out += t.name();
      return;
    case Term::Kind::Abstraction:
      out += '\\';
      out += t.name();
      out += '.';
      render_into(t.body(), out);
      return;
    case Term::Kind::Application: {
      const Term& f = t.function();
      const Term& a = t.argument();
      if (f.is_abstraction()) {
        out += '(';
        render_into(f, out);
        out += ')';
      } else {
        render_into(f, out);
      }
      out += ' ';
      if (a.is_variable()) {
        render_into(a, out);
      } else {
        out += '(';
        render_into(a, out);
        out += ')';
      }
      return;
    }
  }
}

}  // namespace

Term parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Term& t) {
  std::string out;
  render_into(t, out);
  return out;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name[0])) return false;
  for (char c : name.substr(1)) {
    if (!ident_continue(c)) return false;
  }
  return true;
}

}  // namespace lambdalab
