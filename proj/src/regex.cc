// Copyright 2026 The Rederiv Authors. All Rights Reserved.
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

#include "rederiv/regex.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace rederiv {

namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::size_t HashCombine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Symbol::Symbol(std::string name) : name_(std::move(name)) {
  if (!IsValidName(name_)) {
    throw std::invalid_argument("invalid symbol name: \"" + name_ + "\"");
  }
}

bool Symbol::IsValidName(std::string_view name) {
  if (name.empty() || !IsIdentStart(name.front())) return false;
  if (!std::all_of(name.begin(), name.end(), IsIdentChar)) return false;
  return name != "eps";
}

Trace MakeTrace(std::string_view words) {
  Trace trace;
  std::istringstream in{std::string(words)};
  std::string token;
  while (in >> token) trace.emplace_back(token);
  return trace;
}

std::string FormatTrace(const Trace& trace) {
  std::string out;
  for (const Symbol& s : trace) {
    if (!out.empty()) out += ' ';
    out += s.name();
  }
  return out;
}

Regex MakeNode(Kind kind, const Symbol* symbol, const Regex* left,
               const Regex* right) {
  auto node = std::make_shared<internal::Node>();
  node->kind = kind;
  std::size_t h = static_cast<std::size_t>(kind) * 0x100000001b3ULL;
  switch (kind) {
    case Kind::kEmpty:
    case Kind::kEps:
      break;
    case Kind::kSym:
      node->symbol = *symbol;
      h = HashCombine(h, std::hash<std::string>()(symbol->name()));
      break;
    case Kind::kStar:
      node->left = *left;
      node->height = left->height() + 1;
      node->size = left->size() + 1;
      h = HashCombine(h, left->hash());
      break;
    case Kind::kCat:
    case Kind::kOr:
    case Kind::kShuffle:
      node->left = *left;
      node->right = *right;
      node->height = std::max(left->height(), right->height()) + 1;
      node->size = left->size() + right->size() + 1;
      h = HashCombine(HashCombine(h, left->hash()), right->hash());
      break;
  }
  node->hash = h;
  return Regex(std::move(node));
}

Regex Empty() {
  static const Regex kEmpty = MakeNode(Kind::kEmpty, nullptr, nullptr, nullptr);
  return kEmpty;
}

Regex Eps() {
  static const Regex kEps = MakeNode(Kind::kEps, nullptr, nullptr, nullptr);
  return kEps;
}

Regex Sym(const Symbol& symbol) {
  return MakeNode(Kind::kSym, &symbol, nullptr, nullptr);
}

Regex Sym(std::string name) { return Sym(Symbol(std::move(name))); }

Regex Cat(const Regex& left, const Regex& right) {
  return MakeNode(Kind::kCat, nullptr, &left, &right);
}

Regex Or(const Regex& left, const Regex& right) {
  return MakeNode(Kind::kOr, nullptr, &left, &right);
}

Regex Star(const Regex& sub) {
  return MakeNode(Kind::kStar, nullptr, &sub, nullptr);
}

Regex Shuffle(const Regex& left, const Regex& right) {
  return MakeNode(Kind::kShuffle, nullptr, &left, &right);
}

bool operator==(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) {
    return false;
  }
  switch (a.kind()) {
    case Kind::kEmpty:
    case Kind::kEps:
      return true;
    case Kind::kSym:
      return a.symbol() == b.symbol();
    case Kind::kStar:
      return a.left() == b.left();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

std::strong_ordering operator<=>(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Kind::kEmpty:
    case Kind::kEps:
      return std::strong_ordering::equal;
    case Kind::kSym:
      return a.symbol().name() <=> b.symbol().name();
    case Kind::kStar:
      return a.left() <=> b.left();
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

// Truth tables for the flag operators. Rows are the left operand, columns
// the right one, both ordered {0, eps}.
EpsFlag And(EpsFlag a, EpsFlag b) {
  static constexpr EpsFlag kTable[2][2] = {
      {EpsFlag::kZero, EpsFlag::kZero},
      {EpsFlag::kZero, EpsFlag::kEps},
  };
  return kTable[static_cast<int>(a)][static_cast<int>(b)];
}

EpsFlag Or(EpsFlag a, EpsFlag b) {
  static constexpr EpsFlag kTable[2][2] = {
      {EpsFlag::kZero, EpsFlag::kEps},
      {EpsFlag::kEps, EpsFlag::kEps},
  };
  return kTable[static_cast<int>(a)][static_cast<int>(b)];
}

Regex FlagConstant(EpsFlag flag) {
  return flag == EpsFlag::kEps ? Eps() : Empty();
}

EpsFlag HasEps(const Regex& e) {
  switch (e.kind()) {
    case Kind::kEps:
    case Kind::kStar:
      return EpsFlag::kEps;
    case Kind::kEmpty:
    case Kind::kSym:
      return EpsFlag::kZero;
    case Kind::kCat:
    case Kind::kShuffle:
      return And(HasEps(e.left()), HasEps(e.right()));
    case Kind::kOr:
      return Or(HasEps(e.left()), HasEps(e.right()));
  }
  return EpsFlag::kZero;
}

std::size_t Height(const Regex& e) { return e.height(); }

std::size_t Size(const Regex& e) { return e.size(); }

bool IsShuffleFree(const Regex& e) {
  switch (e.kind()) {
    case Kind::kShuffle:
      return false;
    case Kind::kStar:
      return IsShuffleFree(e.sub());
    case Kind::kCat:
    case Kind::kOr:
      return IsShuffleFree(e.left()) && IsShuffleFree(e.right());
    default:
      return true;
  }
}

namespace {

void CollectSymbols(const Regex& e, std::set<Symbol>& out) {
  switch (e.kind()) {
    case Kind::kSym:
      out.insert(e.symbol());
      break;
    case Kind::kStar:
      CollectSymbols(e.sub(), out);
      break;
    case Kind::kCat:
    case Kind::kOr:
    case Kind::kShuffle:
      CollectSymbols(e.left(), out);
      CollectSymbols(e.right(), out);
      break;
    default:
      break;
  }
}

// Binding strength used by Format; higher binds tighter.
int Precedence(Kind kind) {
  switch (kind) {
    case Kind::kShuffle:
      return 0;
    case Kind::kOr:
      return 1;
    case Kind::kCat:
      return 2;
    case Kind::kStar:
      return 3;
    default:
      return 4;
  }
}

void FormatTo(const Regex& e, std::string& out);

void FormatOperand(const Regex& e, bool parens, std::string& out) {
  if (parens) out += '(';
  FormatTo(e, out);
  if (parens) out += ')';
}

void FormatTo(const Regex& e, std::string& out) {
  switch (e.kind()) {
    case Kind::kEmpty:
      out += '0';
      return;
    case Kind::kEps:
      out += "eps";
      return;
    case Kind::kSym:
      out += e.symbol().name();
      return;
    case Kind::kStar:
      FormatOperand(e.sub(), Precedence(e.sub().kind()) < 4, out);
      out += '*';
      return;
    case Kind::kCat:
    case Kind::kOr:
    case Kind::kShuffle: {
      const int p = Precedence(e.kind());
      FormatOperand(e.left(), Precedence(e.left().kind()) < p, out);
      out += e.kind() == Kind::kCat ? " " : e.kind() == Kind::kOr ? " + "
                                                                  : " || ";
      FormatOperand(e.right(), Precedence(e.right().kind()) <= p, out);
      return;
    }
  }
}

enum class Tok { kIdent, kZero, kEps, kLParen, kRParen, kStar, kPlus, kBar2,
                 kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipSpace();
      const int line = line_, column = column_;
      if (pos_ >= text_.size()) {
        tokens.push_back({Tok::kEnd, "", line, column});
        return tokens;
      }
      const char c = text_[pos_];
      if (IsIdentStart(c)) {
        std::size_t end = pos_;
        while (end < text_.size() && IsIdentChar(text_[end])) ++end;
        std::string word(text_.substr(pos_, end - pos_));
        Advance(end - pos_);
        tokens.push_back(
            {word == "eps" ? Tok::kEps : Tok::kIdent, word, line, column});
        continue;
      }
      switch (c) {
        case '0':
          tokens.push_back({Tok::kZero, "0", line, column});
          break;
        case '(':
          tokens.push_back({Tok::kLParen, "(", line, column});
          break;
        case ')':
          tokens.push_back({Tok::kRParen, ")", line, column});
          break;
        case '*':
          tokens.push_back({Tok::kStar, "*", line, column});
          break;
        case '+':
          tokens.push_back({Tok::kPlus, "+", line, column});
          break;
        case '|':
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '|') {
            tokens.push_back({Tok::kBar2, "||", line, column});
            Advance(1);
            break;
          }
          throw ParseError("expected '||'", line, column);
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line, column);
      }
      Advance(1);
    }
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      Advance(1);
    }
  }

  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Regex ParseAll() {
    if (Peek().kind == Tok::kEnd) {
      throw ParseError("empty expression", Peek().line, Peek().column);
    }
    Regex e = ParseShuffle();
    if (Peek().kind != Tok::kEnd) Fail("unexpected '" + Peek().text + "'");
    return e;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, Peek().line, Peek().column);
  }

  static bool StartsAtom(Tok t) {
    return t == Tok::kIdent || t == Tok::kZero || t == Tok::kEps ||
           t == Tok::kLParen;
  }

  Regex ParseShuffle() {
    Regex e = ParseUnion();
    while (Peek().kind == Tok::kBar2) {
      Next();
      e = Shuffle(e, ParseUnion());
    }
    return e;
  }

  Regex ParseUnion() {
    Regex e = ParseConcat();
    while (Peek().kind == Tok::kPlus) {
      Next();
      e = Or(e, ParseConcat());
    }
    return e;
  }

  Regex ParseConcat() {
    Regex e = ParsePostfix();
    while (StartsAtom(Peek().kind)) e = Cat(e, ParsePostfix());
    return e;
  }

  Regex ParsePostfix() {
    Regex e = ParseAtom();
    while (Peek().kind == Tok::kStar) {
      Next();
      e = Star(e);
    }
    return e;
  }

  Regex ParseAtom() {
    switch (Peek().kind) {
      case Tok::kZero:
        Next();
        return Empty();
      case Tok::kEps:
        Next();
        return Eps();
      case Tok::kIdent:
        return Sym(Next().text);
      case Tok::kLParen: {
        Next();
        Regex e = ParseShuffle();
        if (Peek().kind != Tok::kRParen) Fail("expected ')'");
        Next();
        return e;
      }
      case Tok::kEnd:
        Fail("unexpected end of input");
      default:
        Fail("unexpected '" + Peek().text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Symbol> SymbolsOf(const Regex& e) {
  std::set<Symbol> symbols;
  CollectSymbols(e, symbols);
  return {symbols.begin(), symbols.end()};
}

std::string Format(const Regex& e) {
  std::string out;
  FormatTo(e, out);
  return out;
}

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

Regex Parse(std::string_view text) {
  return Parser(Lexer(text).Run()).ParseAll();
}

}  // namespace rederiv
