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

#ifndef REDERIV_REGEX_H_
#define REDERIV_REGEX_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rederiv {

namespace internal {
struct Node;
}  // namespace internal

// An alphabet symbol: an identifier matching [A-Za-z][A-Za-z0-9_]*.
// The keyword "eps" is reserved for the empty-word constant and is rejected.
class Symbol {
 public:
  explicit Symbol(std::string name);

  static bool IsValidName(std::string_view name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  friend struct internal::Node;
  Symbol() = default;

  std::string name_;
};

// A word over the alphabet. May be empty.
using Trace = std::vector<Symbol>;

// Builds a trace from whitespace-separated symbol names.
Trace MakeTrace(std::string_view words);

// Space-separated rendering of a trace; the empty trace renders as "".
std::string FormatTrace(const Trace& trace);

enum class Kind : std::uint8_t {
  kEmpty,
  kEps,
  kSym,
  kCat,
  kOr,
  kStar,
  kShuffle,
};

// An immutable regular expression with shuffle. Nodes are shared, so copies
// are cheap. Equality and ordering are purely structural; no normalization
// is ever applied.
class Regex {
 public:
  Kind kind() const;
  // Only valid for kSym.
  const Symbol& symbol() const;
  // Left operand of a binary node, or the operand of a star.
  const Regex& left() const;
  // Right operand of a binary node.
  const Regex& right() const;
  const Regex& sub() const { return left(); }

  std::size_t hash() const;
  // Metrics are computed once at construction.
  std::size_t height() const;
  std::size_t size() const;

  bool is_binary() const;

  friend bool operator==(const Regex& a, const Regex& b);
  friend std::strong_ordering operator<=>(const Regex& a, const Regex& b);

 private:
  friend struct internal::Node;
  friend Regex MakeNode(Kind, const Symbol*, const Regex*, const Regex*);
  Regex() = default;
  explicit Regex(std::shared_ptr<const internal::Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const internal::Node> node_;
};

Regex Empty();
Regex Eps();
Regex Sym(const Symbol& symbol);
Regex Sym(std::string name);
Regex Cat(const Regex& left, const Regex& right);
Regex Or(const Regex& left, const Regex& right);
Regex Star(const Regex& sub);
Regex Shuffle(const Regex& left, const Regex& right);

// The two-valued nullability flag. EPS plays the role of true.
enum class EpsFlag : std::uint8_t { kZero, kEps };

EpsFlag And(EpsFlag a, EpsFlag b);
EpsFlag Or(EpsFlag a, EpsFlag b);

// The constant expression denoting the flag: kEps -> eps, kZero -> 0.
Regex FlagConstant(EpsFlag flag);

EpsFlag HasEps(const Regex& e);
std::size_t Height(const Regex& e);
std::size_t Size(const Regex& e);
bool IsShuffleFree(const Regex& e);

// Distinct symbols occurring in e, in ascending order.
std::vector<Symbol> SymbolsOf(const Regex& e);

// Minimal-parentheses rendering that round-trips through Parse.
std::string Format(const Regex& e);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Parses the concrete grammar:
//   expr    := shuffle
//   shuffle := union ("||" union)*
//   union   := concat ("+" concat)*
//   concat  := postfix postfix*
//   postfix := atom "*"*
//   atom    := "0" | "eps" | IDENT | "(" expr ")"
// All binary operators are left-associative.
Regex Parse(std::string_view text);

namespace internal {

struct Node {
  Kind kind;
  Symbol symbol;
  Regex left;
  Regex right;
  std::size_t hash = 0;
  std::size_t height = 0;
  std::size_t size = 1;
};

}  // namespace internal

inline Kind Regex::kind() const { return node_->kind; }
inline const Symbol& Regex::symbol() const { return node_->symbol; }
inline const Regex& Regex::left() const { return node_->left; }
inline const Regex& Regex::right() const { return node_->right; }
inline std::size_t Regex::hash() const { return node_->hash; }
inline std::size_t Regex::height() const { return node_->height; }
inline std::size_t Regex::size() const { return node_->size; }
inline bool Regex::is_binary() const {
  return node_->kind == Kind::kCat || node_->kind == Kind::kOr ||
         node_->kind == Kind::kShuffle;
}

struct RegexHash {
  std::size_t operator()(const Regex& e) const { return e.hash(); }
};

}  // namespace rederiv

template <>
struct std::hash<rederiv::Regex> {
  std::size_t operator()(const rederiv::Regex& e) const { return e.hash(); }
};

#endif  // REDERIV_REGEX_H_
