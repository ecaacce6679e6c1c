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

#include <cstddef>
#include <string>
#include <vector>

#include "ebg/ltl.hpp"
#include "ebg/valuation.hpp"

namespace ebg {

// Nondeterministic Büchi automaton whose transition labels are total
// valuations over a fixed atom set.  A run is accepting when it visits an
// accepting state infinitely often.
struct BuchiAutomaton {
  struct Edge {
    Valuation label;
    int target = 0;
  };

  std::vector<std::string> alphabet;      // sorted atom names
  int initial = 0;
  std::vector<std::vector<Edge>> out;     // per-state edges, deterministic order
  std::vector<bool> accepting;

  std::size_t state_count() const { return out.size(); }

  // Plain-text adjacency dump: one `state -- label -> state` line per edge,
  // then the accepting state list.  Debugging aid.
  std::string to_adjacency_text() const;
};

inline constexpr std::size_t kDefaultAutomatonStateCap = std::size_t{1} << 20;

// Compiles the formula into a Büchi automaton over exactly atoms_of(f) that
// accepts an infinite word iff the word satisfies f.  States are maximal
// locally-consistent subsets of the formula's closure; generalized acceptance
// (one obligation set per U/F/G subformula) is reduced to a single set with a
// round-robin counter.  Throws LimitError when the state count would exceed
// `max_states`.
BuchiAutomaton ltl_to_buchi(const LtlFormula& f,
                            std::size_t max_states = kDefaultAutomatonStateCap);

// Whether the automaton accepts the lasso's infinite word.  The lasso's atom
// domain must contain the automaton's alphabet; valuations are restricted to
// the alphabet before matching.  Decided on the product of automaton states
// and lasso positions: accepting iff a reachable cycle contains an accepting
// state.
bool accepts_lasso(const BuchiAutomaton& aut, const Lasso& rho);

}  // namespace ebg
