/*
 * Copyright 2026 the ebgverify authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ebg/ltl.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "ebg/errors.hpp"

namespace ebg {

struct LtlFormula::Node {
  LtlKind kind;
  std::string name;                      // Atom
  std::shared_ptr<const Node> l, r;      // operands
};

namespace {

void require(const LtlFormula& f) {
  if (!f.valid()) throw Error("operation on an empty formula handle");
}

}  // namespace

LtlFormula LtlFormula::atom(std::string name) {
  if (name.empty()) throw Error("atom name must be nonempty");
  auto n = std::make_shared<Node>();
  n->kind = LtlKind::Atom;
  n->name = std::move(name);
  return LtlFormula(std::move(n));
}

LtlFormula LtlFormula::negation(LtlFormula a) {
  if (!a.valid()) throw Error("operand formula is empty");
  auto n = std::make_shared<Node>();
  n->kind = LtlKind::Not;
  n->l = a.node_;
  return LtlFormula(std::move(n));
}

LtlFormula LtlFormula::conjunction(LtlFormula a, LtlFormula b) {
  if (!a.valid() || !b.valid()) throw Error("operand formula is empty");
  auto n = std::make_shared<Node>();
  n->kind = LtlKind::And;
  n->l = a.node_;
  n->r = b.node_;
  return LtlFormula(std::move(n));
}

LtlFormula LtlFormula::disjunction(LtlFormula a, LtlFormula b) {
  if (!a.valid() || !b.valid()) throw Error("operand formula is empty");
  auto n = std::make_shared<Node>();
  n->kind = LtlKind::Or;
  n->l = a.node_;
  n->r = b.node_;
  return LtlFormula(std::move(n));
}

LtlFormula LtlFormula::implication(LtlFormula a, LtlFormula b) {
  if (!a.valid() || !b.valid()) throw Error("operand formula is empty");
  auto n = std::make_shared<Node>();
  n->kind = LtlKind::Implies;
  n->l = a.node_;
  n->r = b.node_;
  return LtlFormula(std::move(n));
}

LtlFormula LtlFormula::next(LtlFormula a) {
  if (!a.valid()) throw Error("operand formula is empty");
  auto n = std::make_shared<Node>();
  n->kind = LtlKind::Next;
  n->l = a.node_;
  return LtlFormula(std::move(n));
}

LtlFormula LtlFormula::until(LtlFormula a, LtlFormula b) {
  if (!a.valid() || !b.valid()) throw Error("operand formula is empty");
  auto n = std::make_shared<Node>();
  n->kind = LtlKind::Until;
  n->l = a.node_;
  n->r = b.node_;
  return LtlFormula(std::move(n));
}

LtlFormula LtlFormula::eventually(LtlFormula a) {
  if (!a.valid()) throw Error("operand formula is empty");
  auto n = std::make_shared<Node>();
  n->kind = LtlKind::Eventually;
  n->l = a.node_;
  return LtlFormula(std::move(n));
}

LtlFormula LtlFormula::always(LtlFormula a) {
  if (!a.valid()) throw Error("operand formula is empty");
  auto n = std::make_shared<Node>();
  n->kind = LtlKind::Always;
  n->l = a.node_;
  return LtlFormula(std::move(n));
}

LtlKind LtlFormula::kind() const {
  require(*this);
  return node_->kind;
}

const std::string& LtlFormula::atom_name() const {
  require(*this);
  if (node_->kind != LtlKind::Atom) throw Error("atom_name() on a non-atom formula");
  return node_->name;
}

LtlFormula LtlFormula::left() const {
  require(*this);
  if (!node_->l) throw Error("formula has no operand");
  return LtlFormula(node_->l);
}

LtlFormula LtlFormula::right() const {
  require(*this);
  if (!node_->r) throw Error("formula has no right operand");
  return LtlFormula(node_->r);
}

bool LtlFormula::is_propositional() const {
  require(*this);
  switch (node_->kind) {
    case LtlKind::Atom:
      return true;
    case LtlKind::Not:
      return left().is_propositional();
    case LtlKind::And:
    case LtlKind::Or:
    case LtlKind::Implies:
      return left().is_propositional() && right().is_propositional();
    default:
      return false;
  }
}

bool LtlFormula::operator==(const LtlFormula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case LtlKind::Atom:
      return node_->name == other.node_->name;
    case LtlKind::Not:
    case LtlKind::Next:
    case LtlKind::Eventually:
    case LtlKind::Always:
      return left() == other.left();
    default:
      return left() == other.left() && right() == other.right();
  }
}

// ---------------------------------------------------------------------------
// Printing.  Binding levels, tightest first: atoms/unary (4), U (3), & (2),
// | (1), -> (0).  U and -> associate to the right, & and | to the left; the
// printer parenthesizes exactly where reparsing would otherwise reassociate.

namespace {

int binding_level(LtlKind k) {
  switch (k) {
    case LtlKind::Atom:
    case LtlKind::Not:
    case LtlKind::Next:
    case LtlKind::Eventually:
    case LtlKind::Always:
      return 4;
    case LtlKind::Until:
      return 3;
    case LtlKind::And:
      return 2;
    case LtlKind::Or:
      return 1;
    case LtlKind::Implies:
      return 0;
  }
  return 0;
}

void print_formula(const LtlFormula& f, int min_level, std::string& out) {
  const int level = binding_level(f.kind());
  const bool parens = level < min_level;
  if (parens) out += '(';
  switch (f.kind()) {
    case LtlKind::Atom:
      out += f.atom_name();
      break;
    case LtlKind::Not:
      out += '!';
      print_formula(f.left(), 4, out);
      break;
    case LtlKind::Next:
      out += "X ";
      print_formula(f.left(), 4, out);
      break;
    case LtlKind::Eventually:
      out += "F ";
      print_formula(f.left(), 4, out);
      break;
    case LtlKind::Always:
      out += "G ";
      print_formula(f.left(), 4, out);
      break;
    case LtlKind::Until:
      print_formula(f.left(), 4, out);  // left operand of right-assoc op
      out += " U ";
      print_formula(f.right(), 3, out);
      break;
    case LtlKind::And:
      print_formula(f.left(), 2, out);
      out += " & ";
      print_formula(f.right(), 3, out);  // right operand of left-assoc op
      break;
    case LtlKind::Or:
      print_formula(f.left(), 1, out);
      out += " | ";
      print_formula(f.right(), 2, out);
      break;
    case LtlKind::Implies:
      print_formula(f.left(), 1, out);
      out += " -> ";
      print_formula(f.right(), 0, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string LtlFormula::to_string() const {
  require(*this);
  std::string out;
  print_formula(*this, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

struct Token {
  enum Type { Ident, Bang, Amp, Pipe, Arrow, LParen, RParen, OpX, OpU, OpF, OpG, End };
  Type type;
  std::string text;
  std::size_t column;  // 1-based offset into the input
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.column = pos_ + 1;
    if (pos_ >= text_.size()) {
      current_.type = Token::End;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (c == '!') { current_ = {Token::Bang, "!", pos_ + 1}; ++pos_; return; }
    if (c == '&') { current_ = {Token::Amp, "&", pos_ + 1}; ++pos_; return; }
    if (c == '|') { current_ = {Token::Pipe, "|", pos_ + 1}; ++pos_; return; }
    if (c == '(') { current_ = {Token::LParen, "(", pos_ + 1}; ++pos_; return; }
    if (c == ')') { current_ = {Token::RParen, ")", pos_ + 1}; ++pos_; return; }
    if (c == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        current_ = {Token::Arrow, "->", pos_ + 1};
        pos_ += 2;
        return;
      }
      throw ParseError("stray '-' (did you mean '->')", 1, pos_ + 1);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      Token::Type type = Token::Ident;
      if (word == "X") type = Token::OpX;
      else if (word == "U") type = Token::OpU;
      else if (word == "F") type = Token::OpF;
      else if (word == "G") type = Token::OpG;
      current_ = {type, std::move(word), start + 1};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>& known_atoms)
      : lexer_(text), atoms_(known_atoms) {}

  LtlFormula parse() {
    LtlFormula f = parse_implies();
    const Token& t = lexer_.peek();
    if (t.type != Token::End)
      throw ParseError("unexpected trailing input '" + t.text + "'", 1, t.column);
    return f;
  }

 private:
  LtlFormula parse_implies() {
    LtlFormula left = parse_or();
    if (lexer_.peek().type == Token::Arrow) {
      lexer_.take();
      return LtlFormula::implication(std::move(left), parse_implies());
    }
    return left;
  }

  LtlFormula parse_or() {
    LtlFormula f = parse_and();
    while (lexer_.peek().type == Token::Pipe) {
      lexer_.take();
      f = LtlFormula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  LtlFormula parse_and() {
    LtlFormula f = parse_until();
    while (lexer_.peek().type == Token::Amp) {
      lexer_.take();
      f = LtlFormula::conjunction(std::move(f), parse_until());
    }
    return f;
  }

  LtlFormula parse_until() {
    LtlFormula left = parse_unary();
    if (lexer_.peek().type == Token::OpU) {
      lexer_.take();
      return LtlFormula::until(std::move(left), parse_until());
    }
    return left;
  }

  LtlFormula parse_unary() {
    const Token t = lexer_.peek();
    switch (t.type) {
      case Token::Bang:
        lexer_.take();
        return LtlFormula::negation(parse_unary());
      case Token::OpX:
        lexer_.take();
        return LtlFormula::next(parse_unary());
      case Token::OpF:
        lexer_.take();
        return LtlFormula::eventually(parse_unary());
      case Token::OpG:
        lexer_.take();
        return LtlFormula::always(parse_unary());
      case Token::LParen: {
        lexer_.take();
        LtlFormula f = parse_implies();
        if (lexer_.peek().type != Token::RParen)
          throw ParseError("missing ')'", 1, lexer_.peek().column);
        lexer_.take();
        return f;
      }
      case Token::Ident: {
        lexer_.take();
        if (t.text == "true" || t.text == "false")
          throw ParseError("'" + t.text + "' is reserved; the grammar has no constants", 1,
                           t.column);
        if (!atoms_.count(t.text))
          throw ParseError("unknown atom '" + t.text + "'", 1, t.column);
        return LtlFormula::atom(t.text);
      }
      case Token::End:
        throw ParseError("unexpected end of formula", 1, t.column);
      default:
        throw ParseError("unexpected '" + t.text + "'", 1, t.column);
    }
  }

  Lexer lexer_;
  const std::set<std::string>& atoms_;
};

}  // namespace

LtlFormula parse_ltl(std::string_view text, const std::set<std::string>& known_atoms) {
  return Parser(text, known_atoms).parse();
}

std::set<std::string> atoms_of(const LtlFormula& f) {
  std::set<std::string> out;
  struct Walk {
    std::set<std::string>& out;
    void operator()(const LtlFormula& g) {
      switch (g.kind()) {
        case LtlKind::Atom:
          out.insert(g.atom_name());
          return;
        case LtlKind::Not:
        case LtlKind::Next:
        case LtlKind::Eventually:
        case LtlKind::Always:
          (*this)(g.left());
          return;
        default:
          (*this)(g.left());
          (*this)(g.right());
          return;
      }
    }
  } walk{out};
  walk(f);
  return out;
}

LtlFormula rewrite_to_core(const LtlFormula& f) {
  switch (f.kind()) {
    case LtlKind::Atom:
      return f;
    case LtlKind::Not:
      return LtlFormula::negation(rewrite_to_core(f.left()));
    case LtlKind::And:
      return LtlFormula::conjunction(rewrite_to_core(f.left()), rewrite_to_core(f.right()));
    case LtlKind::Next:
      return LtlFormula::next(rewrite_to_core(f.left()));
    case LtlKind::Until:
      return LtlFormula::until(rewrite_to_core(f.left()), rewrite_to_core(f.right()));
    case LtlKind::Or: {
      // a | b = !(!a & !b)
      LtlFormula a = rewrite_to_core(f.left()), b = rewrite_to_core(f.right());
      return LtlFormula::negation(LtlFormula::conjunction(LtlFormula::negation(std::move(a)),
                                                          LtlFormula::negation(std::move(b))));
    }
    case LtlKind::Implies: {
      // a -> b = !(a & !b)
      LtlFormula a = rewrite_to_core(f.left()), b = rewrite_to_core(f.right());
      return LtlFormula::negation(
          LtlFormula::conjunction(std::move(a), LtlFormula::negation(std::move(b))));
    }
    case LtlKind::Eventually: {
      // F a = taut U a where taut = !(a & !a); the guard holds everywhere and
      // introduces no new atoms.
      LtlFormula a = rewrite_to_core(f.left());
      LtlFormula taut =
          LtlFormula::negation(LtlFormula::conjunction(a, LtlFormula::negation(a)));
      return LtlFormula::until(std::move(taut), std::move(a));
    }
    case LtlKind::Always:
      // G a = !F!a
      return rewrite_to_core(
          LtlFormula::negation(LtlFormula::eventually(LtlFormula::negation(f.left()))));
  }
  throw Error("unreachable formula kind");
}

// ---------------------------------------------------------------------------
// Lasso evaluation.

const Valuation& Lasso::at(std::size_t t) const {
  if (t < stem.size()) return stem[t];
  return cycle[(t - stem.size()) % cycle.size()];
}

void Lasso::check() const {
  if (cycle.empty()) throw Error("lasso cycle must be nonempty");
  const std::vector<std::string>* dom = nullptr;
  for (const auto* part : {&stem, &cycle})
    for (const auto& v : *part) {
      if (!dom) dom = &v.atoms();
      else if (*dom != v.atoms()) throw Error("lasso valuations must share one atom domain");
    }
}

namespace {

// Tabulates each subformula over positions [0, S+2C): the stem, then two
// unrollings of the cycle.  Apart from untils, whose least fixpoint needs a
// lookahead of one full cycle, values are position-local; after computing a
// node's row the second cycle copy is overwritten with the first (the true
// values are periodic from position S on), so parents always read exact
// values everywhere.
struct LassoEval {
  const Lasso& rho;
  std::size_t S, C, L;
  std::map<const void*, std::vector<char>> memo;

  const std::vector<char>& row(const LtlFormula& f) {
    auto it = memo.find(f.id());
    if (it != memo.end()) return it->second;
    std::vector<char> r(L, 0);
    switch (f.kind()) {
      case LtlKind::Atom:
        for (std::size_t t = 0; t < L; ++t) r[t] = rho.at(t).value(f.atom_name());
        break;
      case LtlKind::Not: {
        const auto& a = row(f.left());
        for (std::size_t t = 0; t < L; ++t) r[t] = !a[t];
        break;
      }
      case LtlKind::And: {
        const auto& a = row(f.left());
        const auto& b = row(f.right());
        for (std::size_t t = 0; t < L; ++t) r[t] = a[t] && b[t];
        break;
      }
      case LtlKind::Or: {
        const auto& a = row(f.left());
        const auto& b = row(f.right());
        for (std::size_t t = 0; t < L; ++t) r[t] = a[t] || b[t];
        break;
      }
      case LtlKind::Implies: {
        const auto& a = row(f.left());
        const auto& b = row(f.right());
        for (std::size_t t = 0; t < L; ++t) r[t] = !a[t] || b[t];
        break;
      }
      case LtlKind::Next: {
        const auto& a = row(f.left());
        for (std::size_t t = 0; t + 1 < L; ++t) r[t] = a[t + 1];
        r[L - 1] = a[S + C];  // position L wraps to the cycle start
        break;
      }
      case LtlKind::Until: {
        const auto& a = row(f.left());
        const auto& b = row(f.right());
        char next = 0;  // seed false; under-approximates only beyond position S+C
        for (std::size_t t = L; t-- > 0;) {
          r[t] = b[t] || (a[t] && next);
          next = r[t];
        }
        break;
      }
      case LtlKind::Eventually: {
        const auto& a = row(f.left());
        char next = 0;
        for (std::size_t t = L; t-- > 0;) {
          r[t] = a[t] || next;
          next = r[t];
        }
        break;
      }
      case LtlKind::Always: {
        const auto& a = row(f.left());
        char next = 1;  // greatest fixpoint seed; exact by the dual argument
        for (std::size_t t = L; t-- > 0;) {
          r[t] = a[t] && next;
          next = r[t];
        }
        break;
      }
    }
    // Enforce periodicity: copy the first cycle unrolling over the second.
    for (std::size_t j = 0; j < C; ++j) r[S + C + j] = r[S + j];
    return memo.emplace(f.id(), std::move(r)).first->second;
  }
};

}  // namespace

bool eval_lasso(const LtlFormula& f, const Lasso& rho) {
  rho.check();
  const Valuation& probe = rho.cycle.front();
  for (const auto& a : atoms_of(f))
    if (!probe.has_atom(a)) throw Error("lasso does not assign atom '" + a + "'");
  LassoEval ev{rho, rho.stem.size(), rho.cycle.size(),
               rho.stem.size() + 2 * rho.cycle.size(), {}};
  return ev.row(f)[0] != 0;
}

bool eval_propositional(const LtlFormula& f, const Valuation& v) {
  switch (f.kind()) {
    case LtlKind::Atom:
      return v.value(f.atom_name());
    case LtlKind::Not:
      return !eval_propositional(f.left(), v);
    case LtlKind::And:
      return eval_propositional(f.left(), v) && eval_propositional(f.right(), v);
    case LtlKind::Or:
      return eval_propositional(f.left(), v) || eval_propositional(f.right(), v);
    case LtlKind::Implies:
      return !eval_propositional(f.left(), v) || eval_propositional(f.right(), v);
    default:
      throw Error("temporal operator in a propositional context");
  }
}

}  // namespace ebg
