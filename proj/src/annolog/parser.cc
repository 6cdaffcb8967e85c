// Copyright 2026 The Annolog Authors.
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

#include "annolog/parser.h"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "annolog/error.h"

namespace annolog {

namespace {

enum class Tok {
  kAtom,      // bare lowercase identifier
  kQuoted,    // "double" or 'single' quoted atom
  kVar,
  kInt,
  kPunct,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string Describe(const Token &t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kQuoted: return "string \"" + t.text + "\"";
    case Tok::kVar: return "variable " + t.text;
    case Tok::kInt: return "integer " + t.text;
    default: return "'" + t.text + "'";
  }
}

bool IsIdentChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // Label from the most recent "% @id NAME" comment; cleared by Take.
  std::string TakeLabel() { return std::exchange(label_, {}); }

  Token Next() {
    SkipSpaceAndComments();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) return tok;

    char c = text_[pos_];
    if ((c >= 'a' && c <= 'z')) {
      tok.kind = Tok::kAtom;
      tok.text = ReadIdent();
    } else if ((c >= 'A' && c <= 'Z') || c == '_') {
      tok.kind = Tok::kVar;
      tok.text = ReadIdent();
    } else if (IsDigit(c) ||
               (c == '-' && pos_ + 1 < text_.size() &&
                IsDigit(text_[pos_ + 1]))) {
      tok.kind = Tok::kInt;
      tok.text.push_back(c);
      Advance();
      while (pos_ < text_.size() && IsDigit(text_[pos_])) {
        tok.text.push_back(text_[pos_]);
        Advance();
      }
    } else if (c == '"' || c == '\'') {
      tok.kind = Tok::kQuoted;
      tok.text = ReadQuoted(c, tok);
    } else {
      tok.kind = Tok::kPunct;
      if (Starts(":-")) {
        tok.text = ":-";
      } else if (Starts("\\+")) {
        tok.text = "\\+";
      } else if (Starts("==")) {
        tok.text = "==";
      } else if (std::string_view("()[]|,:!=.").find(c) !=
                 std::string_view::npos) {
        tok.text = std::string(1, c);
      } else {
        throw ParseError(line_, column_, "token",
                         "character '" + std::string(1, c) + "'");
      }
      for (std::size_t i = 0; i < tok.text.size(); ++i) Advance();
    }
    return tok;
  }

 private:
  bool Starts(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance();
      } else if (c == '%') {
        std::size_t start = pos_ + 1;
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
        ReadPragma(text_.substr(start, pos_ - start));
      } else {
        break;
      }
    }
  }

  void ReadPragma(std::string_view comment) {
    std::size_t i = comment.find_first_not_of(" \t");
    if (i == std::string_view::npos) return;
    comment.remove_prefix(i);
    if (comment.substr(0, 4) != "@id ") return;
    comment.remove_prefix(4);
    std::size_t end = comment.find_last_not_of(" \t\r");
    std::size_t begin = comment.find_first_not_of(" \t");
    if (begin == std::string_view::npos) return;
    label_ = std::string(comment.substr(begin, end - begin + 1));
  }

  std::string ReadIdent() {
    std::string out;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
      out.push_back(text_[pos_]);
      Advance();
    }
    return out;
  }

  std::string ReadQuoted(char quote, const Token &start) {
    Advance();
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw ParseError(start.line, start.column, "closing quote",
                         "unterminated string");
      }
      char c = text_[pos_];
      if (c == quote) {
        Advance();
        return out;
      }
      if (c == '\\' && pos_ + 1 < text_.size()) {
        Advance();
        char e = text_[pos_];
        switch (e) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          default: out.push_back(e);
        }
        Advance();
        continue;
      }
      out.push_back(c);
      Advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::string label_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { Shift(); }

  SourceProgram Program() {
    SourceProgram program;
    std::map<PredicateKey, int, KeyLess> counts;
    while (tok_.kind != Tok::kEnd) {
      std::string label = lexer_.TakeLabel();
      Clause clause = ParseClause();
      PredicateKey key = *KeyOf(clause.head);
      int k = ++counts[key];
      clause.label =
          label.empty() ? key.ToString() + "#" + std::to_string(k) : label;
      program.clauses.push_back(std::move(clause));
    }
    return program;
  }

  Query QueryGoals() {
    Query query;
    query.goals = ParseGoals();
    if (tok_.kind == Tok::kPunct && tok_.text == ".") Shift();
    if (tok_.kind != Tok::kEnd) Fail("end of query");
    query.variables = named_;
    query.next_var = next_var_;
    return query;
  }

 private:
  struct KeyLess {
    bool operator()(const PredicateKey &a, const PredicateKey &b) const {
      return a.name != b.name ? a.name < b.name : a.arity < b.arity;
    }
  };

  void Shift() { tok_ = lexer_.Next(); }

  [[noreturn]] void Fail(const std::string &expected) {
    throw ParseError(tok_.line, tok_.column, expected, Describe(tok_));
  }

  bool IsPunct(std::string_view p) const {
    return tok_.kind == Tok::kPunct && tok_.text == p;
  }

  void Expect(std::string_view p) {
    if (!IsPunct(p)) Fail("'" + std::string(p) + "'");
    Shift();
  }

  Clause ParseClause() {
    vars_.clear();
    named_.clear();
    next_var_ = 1;
    Clause clause;
    clause.pos = {tok_.line, tok_.column};
    if (tok_.kind != Tok::kAtom && tok_.kind != Tok::kQuoted) {
      Fail("clause head (atom or compound)");
    }
    clause.head = ParseTerm();
    if (IsPunct(":-")) {
      Shift();
      clause.body = ParseGoals();
    }
    Expect(".");
    return clause;
  }

  std::vector<Goal> ParseGoals() {
    std::vector<Goal> goals;
    ParseGoal(goals);
    while (IsPunct(",")) {
      Shift();
      ParseGoal(goals);
    }
    return goals;
  }

  void ParseGoal(std::vector<Goal> &out) {
    if (IsPunct("!")) {
      Shift();
      out.push_back(Goal::Cut());
      return;
    }
    if (IsPunct("\\+")) {
      Shift();
      std::vector<Goal> inner;
      if (IsPunct("(")) {
        Shift();
        inner = ParseGoals();
        Expect(")");
      } else {
        ParseGoal(inner);
      }
      out.push_back(Goal::Not(std::move(inner)));
      return;
    }
    if (IsPunct("(")) {
      Shift();
      for (Goal &g : ParseGoals()) out.push_back(std::move(g));
      Expect(")");
      return;
    }
    Token start = tok_;
    Term t = ParseTerm();
    if (IsPunct("=") || IsPunct("==")) {
      std::string op = tok_.text;
      Shift();
      Term rhs = ParseTerm();
      out.push_back(Goal::Call(Term::Compound(op, {t, rhs})));
      return;
    }
    std::string module;
    if (IsPunct(":")) {
      if (!t.is_atom()) {
        throw ParseError(start.line, start.column, "module name",
                         Describe(start));
      }
      module = t.name();
      Shift();
      start = tok_;
      t = ParseTerm();
    }
    if (!t.is_atom() && !t.is_compound()) {
      throw ParseError(start.line, start.column, "callable goal",
                       Describe(start));
    }
    out.push_back(Goal::Call(std::move(t), std::move(module)));
  }

  Term ParseTerm() {
    switch (tok_.kind) {
      case Tok::kVar: {
        std::string name = tok_.text;
        Shift();
        return Variable(name);
      }
      case Tok::kInt: {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(
            tok_.text.data(), tok_.text.data() + tok_.text.size(), value);
        if (ec != std::errc()) Fail("integer in range");
        Shift();
        return Term::Int(value);
      }
      case Tok::kAtom:
      case Tok::kQuoted: {
        std::string name = tok_.text;
        Shift();
        if (!IsPunct("(")) return Term::Atom(std::move(name));
        Shift();
        std::vector<Term> args;
        args.push_back(ParseTerm());
        while (IsPunct(",")) {
          Shift();
          args.push_back(ParseTerm());
        }
        Expect(")");
        return Term::Compound(std::move(name), std::move(args));
      }
      case Tok::kPunct:
        if (IsPunct("[")) return ParseList();
        [[fallthrough]];
      default:
        Fail("term");
    }
  }

  Term ParseList() {
    Expect("[");
    if (IsPunct("]")) {
      Shift();
      return Term::Nil();
    }
    std::vector<Term> items;
    items.push_back(ParseTerm());
    while (IsPunct(",")) {
      Shift();
      items.push_back(ParseTerm());
    }
    Term tail = Term::Nil();
    if (IsPunct("|")) {
      Shift();
      tail = ParseTerm();
    }
    Expect("]");
    return Term::List(items, tail);
  }

  Term Variable(const std::string &name) {
    if (name == "_") return Term::Var(next_var_++, "_");
    auto it = vars_.find(name);
    if (it != vars_.end()) return it->second;
    Term v = Term::Var(next_var_++, name);
    vars_.emplace(name, v);
    named_.emplace_back(name, v.var_id());
    return v;
  }

  Lexer lexer_;
  Token tok_;
  std::map<std::string, Term> vars_;
  std::vector<std::pair<std::string, VarId>> named_;
  VarId next_var_ = 1;
};

}  // namespace

Term Query::NewVar(const std::string &name) {
  VarId id = next_var++;
  if (name != "_") variables.emplace_back(name, id);
  return Term::Var(id, name);
}

SourceProgram ParseProgram(std::string_view text) {
  return Parser(text).Program();
}

Query ParseQuery(std::string_view text) { return Parser(text).QueryGoals(); }

SourceProgram ParseProgramFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read rule file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseProgram(buffer.str());
  } catch (const ParseError &e) {
    throw ParseError(e.line(), e.column(), e.expected(), e.found(), path);
  }
}

std::string PrintProgram(const SourceProgram &program) {
  std::string out;
  for (const Clause &c : program.clauses) {
    out += "% @id " + c.label + "\n";
    out += c.ToString() + "\n";
  }
  return out;
}

}  // namespace annolog
