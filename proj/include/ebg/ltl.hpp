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

#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ebg/valuation.hpp"

namespace ebg {

enum class LtlKind {
  Atom,
  Not,
  And,
  Or,
  Implies,
  Next,
  Until,
  Eventually,
  Always,
};

// Immutable LTL formula over named atoms.  Subterms are shared; equality is
// structural.  The core fragment is {atom, not, and, next, until}; or,
// implies, eventually and always are derived and can be eliminated with
// rewrite_to_core().
class LtlFormula {
 public:
  LtlFormula() = default;  // empty handle; only assignment is valid on it

  static LtlFormula atom(std::string name);
  static LtlFormula negation(LtlFormula a);
  static LtlFormula conjunction(LtlFormula a, LtlFormula b);
  static LtlFormula disjunction(LtlFormula a, LtlFormula b);
  static LtlFormula implication(LtlFormula a, LtlFormula b);
  static LtlFormula next(LtlFormula a);
  static LtlFormula until(LtlFormula a, LtlFormula b);
  static LtlFormula eventually(LtlFormula a);
  static LtlFormula always(LtlFormula a);

  bool valid() const { return node_ != nullptr; }
  LtlKind kind() const;
  const std::string& atom_name() const;  // Atom only
  LtlFormula left() const;               // unary operand or left operand
  LtlFormula right() const;              // binary right operand

  // True when the formula uses no temporal operator (valid as a guard).
  bool is_propositional() const;

  // Minimal-parentheses rendering; parse_ltl(to_string(f)) reproduces f.
  std::string to_string() const;

  bool operator==(const LtlFormula& other) const;
  bool operator!=(const LtlFormula& other) const { return !(*this == other); }

  // Stable identity of the shared node, for memoization tables.
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit LtlFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Parses the ASCII syntax: atoms are identifiers, `!` `&` `|` `->` the boolean
// connectives, `X` `U` `F` `G` the temporal operators (reserved words), and
// parentheses group.  Binding, tightest first: unary {! X F G}, then U
// (right-associative), then &, then |, then -> (right-associative).
// Every atom must be a member of `known_atoms`.
LtlFormula parse_ltl(std::string_view text, const std::set<std::string>& known_atoms);

// Atoms occurring syntactically in the formula.
std::set<std::string> atoms_of(const LtlFormula& f);

// Eliminates or/implies/eventually/always:
//   a | b   ->  !(!a & !b)
//   a -> b  ->  !(a & !b)
//   F a     ->  !(a & !a) U a        (left side is a tautology over a's atoms)
//   G a     ->  !(F !a)
// The result evaluates identically on every play and mentions the same atoms.
LtlFormula rewrite_to_core(const LtlFormula& f);

// An ultimately-periodic play: stem · cycle^ω of total valuations over one
// shared atom set.  The cycle must be nonempty.
struct Lasso {
  std::vector<Valuation> stem;
  std::vector<Valuation> cycle;

  // Valuation at position t of the infinite play (any t >= 0).
  const Valuation& at(std::size_t t) const;
  std::size_t stem_size() const { return stem.size(); }
  std::size_t cycle_size() const { return cycle.size(); }

  // Throws Error unless the cycle is nonempty and all valuations share one
  // atom domain.
  void check() const;
};

// Whether the infinite play described by the lasso satisfies the formula.
// Requires atoms_of(f) to be contained in the lasso's atom domain.
bool eval_lasso(const LtlFormula& f, const Lasso& rho);

// Propositional evaluation against a single valuation (guards); throws Error
// on temporal operators or atoms missing from the valuation.
bool eval_propositional(const LtlFormula& f, const Valuation& v);

}  // namespace ebg
