// Copyright 2026 The Supergeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats.
//
// Presentation files (.sv):
//
//   # comment
//   evens x y
//   odds xi eta
//   ideal x*xi + y*eta, x^2 - 1/2
//   point 1, 0
//
// Expressions use + - * / ^ and parentheses over integers, the imaginary
// unit `i` and declared variables; `/` only divides by nonzero constants.
// Point coordinates are separated by commas, or by whitespace when every
// coordinate is written without spaces. A line ending in `,` or an open
// parenthesis continues on the next line.
//
// Matrix files (for `ber`): `evens`/`odds` declarations of the coefficient
// algebra, `blocks m n`, then m+n rows of comma separated entries.
//
// Action files (for `stabilizer`): `group <gl|sl|osp|psp> m n`, the space's
// `evens`/`odds`/`ideal`, one `action <coord> = <expr>` per space coordinate
// over the group and space variables (`ber` names the generic Berezinian for
// gl and sl), and `point` giving u.

#ifndef SUPERGEOM_DSL_HPP_
#define SUPERGEOM_DSL_HPP_

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supergeom/supergroups.hpp"
#include "supergeom/supermatrix.hpp"
#include "supergeom/superpoly.hpp"

namespace supergeom {

struct SourceFile {
  Presentation presentation;
  std::optional<ClosedPoint> point;
};

struct MatrixFile {
  SuperMatrix matrix;
};

struct ActionFile {
  ActionPresentation action;
  ClosedPoint point;
};

namespace dsl {

enum class Tok { kIdent, kInt, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kComma,
                 kEquals, kNewline, kEnd };

inline const char* TokName(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kInt: return "integer";
    case Tok::kPlus: return "'+'";
    case Tok::kMinus: return "'-'";
    case Tok::kStar: return "'*'";
    case Tok::kSlash: return "'/'";
    case Tok::kCaret: return "'^'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kEquals: return "'='";
    case Tok::kNewline: return "end of line";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
  bool space_before;
};

inline std::vector<Token> Lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1, depth = 0;
  bool space = true;
  std::size_t k = 0;
  auto push = [&](Tok kind, std::string text, int c) {
    out.push_back({kind, std::move(text), line, c, space});
    space = false;
  };
  while (k < src.size()) {
    const char ch = src[k];
    if (ch == '#') {
      while (k < src.size() && src[k] != '\n') ++k;
      continue;
    }
    if (ch == '\n') {
      // Continuation after a trailing comma or inside parentheses.
      const bool cont = depth > 0 || (!out.empty() && out.back().kind == Tok::kComma);
      if (!cont && (out.empty() || out.back().kind != Tok::kNewline)) push(Tok::kNewline, "", col);
      ++line;
      col = 1;
      ++k;
      space = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++k;
      ++col;
      space = true;
      continue;
    }
    const int start_col = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t end = k;
      while (end < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_')) {
        ++end;
      }
      push(Tok::kIdent, std::string(src.substr(k, end - k)), start_col);
      col += static_cast<int>(end - k);
      k = end;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t end = k;
      while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
      push(Tok::kInt, std::string(src.substr(k, end - k)), start_col);
      col += static_cast<int>(end - k);
      k = end;
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; ++depth; break;
      case ')': kind = Tok::kRParen; depth = depth > 0 ? depth - 1 : 0; break;
      case ',': kind = Tok::kComma; break;
      case '=': kind = Tok::kEquals; break;
      default:
        throw ParseError(ErrorKind::kParseError, line, col,
                         std::string("unexpected character '") + ch + "'");
    }
    push(kind, std::string(1, ch), start_col);
    ++k;
    ++col;
  }
  if (out.empty() || out.back().kind != Tok::kNewline) push(Tok::kNewline, "", col);
  out.push_back({Tok::kEnd, "", line, col, true});
  return out;
}

inline bool IsReserved(std::string_view name) {
  return name == "i" || name == "evens" || name == "odds" || name == "ideal" ||
         name == "point" || name == "blocks" || name == "group" || name == "action";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lex(src)) {}

  const Token& Peek(std::size_t ahead = 0) const {
    if (pos_ + ahead >= limit_) return toks_.back();
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool At(Tok kind) const { return Peek().kind == kind; }
  bool AtKeyword(std::string_view word) const {
    return At(Tok::kIdent) && Peek().text == word;
  }
  const Token& Next() {
    const Token& t = Peek();
    if (pos_ < toks_.size() - 1 && pos_ < limit_) ++pos_;
    return t;
  }

  [[noreturn]] void Fail(const Token& at, const std::string& message,
                         ErrorKind kind = ErrorKind::kParseError) const {
    throw ParseError(kind, at.line, at.column, message);
  }

  [[noreturn]] void Expected(const std::string& what) const {
    const Token& t = Peek();
    std::string found = t.kind == Tok::kIdent || t.kind == Tok::kInt
                            ? std::string(TokName(t.kind)) + " '" + t.text + "'"
                            : TokName(t.kind);
    Fail(t, "expected " + what + ", found " + found);
  }

  const Token& Expect(Tok kind) {
    if (!At(kind)) Expected(TokName(kind));
    return Next();
  }

  void SkipNewlines() {
    while (At(Tok::kNewline)) Next();
  }

  void EndStatement() {
    if (!At(Tok::kNewline) && !At(Tok::kEnd)) Expected("end of line");
    SkipNewlines();
  }

  long ParseInt() {
    const Token& t = Expect(Tok::kInt);
    try {
      return std::stol(t.text);
    } catch (const std::exception&) {
      Fail(t, "integer out of range");
    }
  }

  std::vector<std::string> ParseNameList() {
    std::vector<std::string> names;
    while (At(Tok::kIdent)) {
      const Token& t = Next();
      if (IsReserved(t.text)) Fail(t, "'" + t.text + "' is reserved");
      for (const auto& n : names) {
        if (n == t.text) Fail(t, "'" + t.text + "' declared twice", ErrorKind::kDuplicateVariable);
      }
      names.push_back(t.text);
    }
    return names;
  }

  void SetTable(VarTablePtr table) { table_ = std::move(table); }
  void SetMacros(std::map<std::string, SuperPolynomial> macros) { macros_ = std::move(macros); }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  SuperPolynomial ParseExpr() {
    SuperPolynomial acc(table_);
    bool negate = false;
    if (At(Tok::kPlus) || At(Tok::kMinus)) negate = Next().kind == Tok::kMinus;
    acc = ParseTerm();
    if (negate) acc = -acc;
    while (At(Tok::kPlus) || At(Tok::kMinus)) {
      const bool minus = Next().kind == Tok::kMinus;
      SuperPolynomial rhs = ParseTerm();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Scalar ParseConstant() {
    const Token& start = Peek();
    SuperPolynomial p = ParseExpr();
    if (p.degree() > 0) Fail(start, "expected a constant");
    return p.constant_term();
  }

  ClosedPoint ParsePointCoords() {
    ClosedPoint point;
    bool has_comma = false;
    for (std::size_t k = pos_; toks_[k].kind != Tok::kNewline && toks_[k].kind != Tok::kEnd; ++k) {
      if (toks_[k].kind == Tok::kComma) has_comma = true;
    }
    if (has_comma) {
      point.coords.push_back(ParseConstant());
      while (At(Tok::kComma)) {
        Next();
        point.coords.push_back(ParseConstant());
      }
      return point;
    }
    while (!At(Tok::kNewline) && !At(Tok::kEnd)) {
      // One coordinate per whitespace-separated group of tokens; spaces
      // inside parentheses do not split.
      std::size_t end = pos_;
      int depth = 0;
      do {
        if (toks_[end].kind == Tok::kLParen) ++depth;
        if (toks_[end].kind == Tok::kRParen) --depth;
        ++end;
      } while (toks_[end].kind != Tok::kNewline && toks_[end].kind != Tok::kEnd &&
               (depth > 0 || !toks_[end].space_before));
      const Token& start = Peek();
      limit_ = end;
      Scalar c = ParseConstant();
      limit_ = kNoLimit;
      if (pos_ != end) Fail(start, "malformed coordinate; separate compound coordinates with ','");
      point.coords.push_back(std::move(c));
    }
    return point;
  }

 private:
  // term := unary (('*'|'/') unary)*
  SuperPolynomial ParseTerm() {
    SuperPolynomial acc = ParseUnary();
    while (At(Tok::kStar) || At(Tok::kSlash)) {
      const Token& op = Next();
      SuperPolynomial rhs = ParseUnary();
      if (op.kind == Tok::kStar) {
        acc = acc * rhs;
        continue;
      }
      if (rhs.degree() > 0) Fail(op, "division by a non-constant expression");
      if (rhs.is_zero()) Fail(op, "division by zero");
      acc *= rhs.constant_term().inverse();
    }
    return acc;
  }

  SuperPolynomial ParseUnary() {
    if (At(Tok::kMinus)) {
      Next();
      return -ParseUnary();
    }
    if (At(Tok::kPlus)) {
      Next();
      return ParseUnary();
    }
    return ParsePower();
  }

  // power := primary ('^' integer)?
  SuperPolynomial ParsePower() {
    SuperPolynomial base = ParsePrimary();
    if (!At(Tok::kCaret)) return base;
    Next();
    const Token& t = Peek();
    const long e = ParseInt();
    if (e < 0 || e > 1000) Fail(t, "exponent out of range");
    return base.Pow(static_cast<unsigned>(e));
  }

  SuperPolynomial ParsePrimary() {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kInt: {
        Next();
        return SuperPolynomial::Constant(table_, Scalar(mpq_class(mpz_class(t.text))));
      }
      case Tok::kIdent: {
        Next();
        if (t.text == "i") return SuperPolynomial::Constant(table_, Scalar::I());
        if (auto it = macros_.find(t.text); it != macros_.end()) return it->second;
        if (!table_ || !table_->Find(t.text)) {
          Fail(t, "unknown variable '" + t.text + "'", ErrorKind::kUnknownVariable);
        }
        return SuperPolynomial::Var(table_, t.text);
      }
      case Tok::kLParen: {
        Next();
        SuperPolynomial inner = ParseExpr();
        Expect(Tok::kRParen);
        return inner;
      }
      default:
        Expected("expression");
    }
  }

  std::vector<Token> toks_;
  static constexpr std::size_t kNoLimit = static_cast<std::size_t>(-1);
  std::size_t pos_ = 0;
  std::size_t limit_ = kNoLimit;  // tokens from here on read as end of input
  VarTablePtr table_;
  std::map<std::string, SuperPolynomial> macros_;
};

// Shared handling of the evens/odds/ideal/point statements.
struct SpaceDecls {
  std::optional<std::vector<std::string>> evens;
  std::optional<std::vector<std::string>> odds;
  VarTablePtr table;
  std::vector<std::pair<SuperPolynomial, Token>> gens;
  std::optional<ClosedPoint> point;
  std::optional<Token> point_token;

  // Returns false if the current statement is not one of these.
  bool TryParse(Parser& p) {
    const Token& kw = p.Peek();
    if (p.AtKeyword("evens") || p.AtKeyword("odds")) {
      const bool is_even = kw.text == "evens";
      p.Next();
      auto& slot = is_even ? evens : odds;
      if (slot) p.Fail(kw, "duplicate '" + kw.text + "' declaration");
      if (table) p.Fail(kw, "'" + kw.text + "' must precede ideal and point statements");
      slot = p.ParseNameList();
      p.EndStatement();
      return true;
    }
    if (p.AtKeyword("ideal")) {
      p.Next();
      EnsureTable(p);
      do {
        if (p.At(Tok::kComma)) p.Next();
        const Token at = p.Peek();
        SuperPolynomial g = p.ParseExpr();
        if (!g.parity()) {
          p.Fail(at, "generator mixes even and odd terms: " + g.ToString(),
                 ErrorKind::kMixedParityGenerator);
        }
        gens.emplace_back(std::move(g), at);
      } while (p.At(Tok::kComma));
      p.EndStatement();
      return true;
    }
    if (p.AtKeyword("point")) {
      p.Next();
      EnsureTable(p);
      if (point) p.Fail(kw, "duplicate 'point' declaration");
      point_token = kw;
      point = p.ParsePointCoords();
      if (point->size() != table->num_even()) {
        p.Fail(kw, "point has " + std::to_string(point->size()) + " coordinates, expected " +
                       std::to_string(table->num_even()));
      }
      p.EndStatement();
      return true;
    }
    return false;
  }

  void EnsureTable(Parser& p) {
    if (!table) {
      try {
        table = VarTable::Make(evens.value_or(std::vector<std::string>{}),
                               odds.value_or(std::vector<std::string>{}));
      } catch (const Error& e) {
        p.Fail(p.Peek(), e.what(), e.kind());
      }
      p.SetTable(table);
    }
  }

  Presentation MakePresentation() const {
    std::vector<SuperPolynomial> all;
    for (const auto& [g, tok] : gens) all.push_back(g);
    return Presentation::Make(table, all);
  }
};

}  // namespace dsl

inline SourceFile ParseSource(std::string_view text) {
  dsl::Parser p(text);
  dsl::SpaceDecls decls;
  p.SkipNewlines();
  while (!p.At(dsl::Tok::kEnd)) {
    if (!decls.TryParse(p)) p.Expected("'evens', 'odds', 'ideal' or 'point'");
  }
  decls.EnsureTable(p);
  return {decls.MakePresentation(), decls.point};
}

inline MatrixFile ParseMatrixFile(std::string_view text) {
  dsl::Parser p(text);
  dsl::SpaceDecls decls;
  p.SkipNewlines();
  while (!p.AtKeyword("blocks")) {
    if (p.At(dsl::Tok::kEnd)) p.Expected("'blocks'");
    if (p.AtKeyword("ideal") || p.AtKeyword("point") || !decls.TryParse(p)) {
      p.Expected("'evens', 'odds' or 'blocks'");
    }
  }
  const dsl::Token kw = p.Next();
  const long m = p.ParseInt();
  const long n = p.ParseInt();
  if (m < 0 || n < 0 || m + n < 1 || m + n > 64) p.Fail(kw, "bad block sizes");
  p.EndStatement();
  decls.EnsureTable(p);
  const auto size = static_cast<std::size_t>(m + n);
  PolyMatrix entries(decls.table, size, size);
  for (std::size_t i = 0; i < size; ++i) {
    if (p.At(dsl::Tok::kEnd)) p.Expected("matrix row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < size; ++j) {
      if (j > 0) p.Expect(dsl::Tok::kComma);
      entries(i, j) = p.ParseExpr();
    }
    p.EndStatement();
  }
  if (!p.At(dsl::Tok::kEnd)) p.Expected("end of input after " + std::to_string(size) + " rows");
  try {
    return {SuperMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n),
                        std::move(entries))};
  } catch (const Error& e) {
    p.Fail(kw, e.what(), e.kind());
  }
}

inline GroupPresentation GroupByName(const std::string& kind, int m, int n) {
  if (kind == "gl") return GlPresentation(m, n);
  if (kind == "sl") return SlPresentation(m, n);
  if (kind == "osp") return OspPresentation(m, n);
  if (kind == "psp") return PspPresentation(m, n);
  throw Error(ErrorKind::kBadDims, "unknown group '" + kind + "' (expected gl, sl, osp, psp)");
}

inline ActionFile ParseActionFile(std::string_view text) {
  dsl::Parser p(text);
  p.SkipNewlines();
  if (!p.AtKeyword("group")) p.Expected("'group'");
  const dsl::Token kw = p.Next();
  const std::string kind = p.Expect(dsl::Tok::kIdent).text;
  const long m = p.ParseInt();
  const long n = p.ParseInt();
  p.EndStatement();
  std::optional<GroupPresentation> group;
  try {
    group = GroupByName(kind, static_cast<int>(m), static_cast<int>(n));
  } catch (const Error& e) {
    p.Fail(kw, e.what(), e.kind());
  }

  dsl::SpaceDecls decls;
  std::map<std::string, std::pair<SuperPolynomial, dsl::Token>> images;
  VarTablePtr joint;
  while (!p.At(dsl::Tok::kEnd)) {
    if (decls.TryParse(p)) continue;
    if (!p.AtKeyword("action")) p.Expected("'evens', 'odds', 'ideal', 'action' or 'point'");
    const dsl::Token akw = p.Next();
    decls.EnsureTable(p);
    if (!joint) {
      try {
        joint = JointTable(*group->base.vars, *decls.table);
      } catch (const Error& e) {
        p.Fail(akw, e.what(), e.kind());
      }
    }
    const dsl::Token name = p.Expect(dsl::Tok::kIdent);
    if (!decls.table->Find(name.text)) {
      p.Fail(name, "'" + name.text + "' is not a space coordinate", ErrorKind::kUnknownVariable);
    }
    if (images.count(name.text)) p.Fail(name, "duplicate action for '" + name.text + "'");
    p.Expect(dsl::Tok::kEquals);
    std::map<std::string, SuperPolynomial> macros;
    if (kind == "gl" || kind == "sl") {
      macros.emplace("ber", Embed(GenericBerezinian(static_cast<int>(m), static_cast<int>(n)),
                                  joint));
    }
    p.SetTable(joint);
    p.SetMacros(std::move(macros));
    SuperPolynomial img = p.ParseExpr();
    p.SetTable(decls.table);
    p.SetMacros({});
    images.emplace(name.text, std::make_pair(std::move(img), name));
    p.EndStatement();
  }
  decls.EnsureTable(p);
  if (!decls.point) p.Fail(kw, "action file needs a 'point' statement");
  std::vector<SuperPolynomial> even_imgs, odd_imgs;
  for (const auto& name : decls.table->even_names()) {
    auto it = images.find(name);
    if (it == images.end()) p.Fail(kw, "no action given for '" + name + "'");
    even_imgs.push_back(it->second.first);
  }
  for (const auto& name : decls.table->odd_names()) {
    auto it = images.find(name);
    if (it == images.end()) p.Fail(kw, "no action given for '" + name + "'");
    odd_imgs.push_back(it->second.first);
  }
  try {
    return {ActionPresentation::Make(std::move(*group), decls.MakePresentation(),
                                     std::move(even_imgs), std::move(odd_imgs)),
            *decls.point};
  } catch (const Error& e) {
    p.Fail(kw, e.what(), e.kind());
  }
}

// Coordinates in `point` statement syntax, e.g. "1, -1/2" or "0 0".
inline ClosedPoint ParsePoint(std::string_view text, const VarTablePtr& table) {
  dsl::Parser p(text);
  p.SetTable(table);
  p.SkipNewlines();
  ClosedPoint point = p.ParsePointCoords();
  p.SkipNewlines();
  if (!p.At(dsl::Tok::kEnd)) p.Expected("end of input");
  if (point.size() != table->num_even()) {
    throw ParseError(ErrorKind::kParseError, 1, 1,
                     "point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(table->num_even()));
  }
  return point;
}

inline std::string PrintPoint(const ClosedPoint& point) {
  std::string out = "point";
  for (std::size_t k = 0; k < point.size(); ++k) {
    out += k == 0 ? " " : ", ";
    out += point.coords[k].to_string();
  }
  return out;
}

// Inverse of ParseSource: one generator per `ideal` line, even ones first.
inline std::string PrintPresentation(const Presentation& x,
                                     const std::optional<ClosedPoint>& point = std::nullopt) {
  std::string out = "evens";
  for (const auto& n : x.vars->even_names()) out += " " + n;
  out += "\nodds";
  for (const auto& n : x.vars->odd_names()) out += " " + n;
  out += "\n";
  for (const auto& g : x.generators()) out += "ideal " + g.ToString() + "\n";
  if (point) out += PrintPoint(*point) + "\n";
  return out;
}

}  // namespace supergeom

#endif  // SUPERGEOM_DSL_HPP_
