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

#ifndef EBG_FEASIBILITY_HPP_
#define EBG_FEASIBILITY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ebg/energy.hpp"
#include "ebg/game.hpp"
#include "ebg/strategy.hpp"
#include "ebg/valuation.hpp"

namespace ebg {

// Weighted product of a full strategy profile.  Every reachable joint memory
// tuple has exactly one successor (the profile is deterministic), so the
// reachable part is a single lasso; vertices are numbered in visit order and
// the final edge returns to vertex stem_size.  The weight attached to a
// vertex is the cost vector of the choices made there: dimension i is the
// cost of player i's prescribed valuation.
struct ProductGraph {
  std::vector<std::vector<int>> tuples;             // joint memory per vertex
  std::vector<Valuation> letters;                   // complete valuation chosen per vertex
  std::vector<std::vector<std::int64_t>> weights;   // outgoing-edge weight per vertex
  std::vector<int> next;                            // the unique successor
  std::size_t stem_size = 0;

  std::size_t vertex_count() const { return tuples.size(); }
  std::size_t cycle_size() const { return tuples.size() - stem_size; }
};

ProductGraph build_product(const EbgGame& game, const std::vector<StrategyMachine>& profile);

// The product as an energy arena (one dimension per player, every vertex
// accepting), for cycle-oracle cross-checks against the direct decision.
ExplicitArena product_arena(const ProductGraph& graph);

struct EnergyViolation {
  int player = 0;            // 0-based
  std::int64_t step = 0;     // first t with E_player(t) < 0
  std::int64_t value = 0;    // the negative endowment reached
};

struct PositiveCycle {
  int player = 0;            // 0-based dimension whose cycle total is positive
  std::int64_t total = 0;    // cycle weight sum in that dimension (> 0)
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<EnergyViolation> violation;       // set iff infeasible
  std::optional<PositiveCycle> positive_cycle;    // set when the violation only
                                                  // materializes by repeating the cycle
};

// Decides whether every player's endowment stays nonnegative forever under
// the profile: the prefix (stem plus first cycle round) must never dip below
// zero and the cycle total must be <= 0 in every dimension.  An infeasible
// profile yields the earliest concrete violation (lowest player on ties); if
// the prefix is clean but some cycle total is positive, the simulation is
// extended until the drift produces the first actual negative step.
FeasibilityResult is_feasible(const EbgGame& game, const std::vector<StrategyMachine>& profile);

}  // namespace ebg

#endif  // EBG_FEASIBILITY_HPP_
