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

#ifndef EBG_EQUILIBRIUM_HPP_
#define EBG_EQUILIBRIUM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "ebg/deviation.hpp"
#include "ebg/feasibility.hpp"
#include "ebg/game.hpp"
#include "ebg/strategy.hpp"

namespace ebg {

// 1 iff the profile is feasible and the induced play satisfies the player's
// objective; 0 otherwise.
int payoff(const EbgGame& g, const Profile& profile, int player);

enum class NemOutcome { Equilibrium, NotEquilibrium, Unknown };

// Verdict of the Nash-equilibrium membership check.  On NotEquilibrium
// exactly one reason is set: either the infeasibility witness (with the
// positive cycle when the violation only materializes by drift) or the
// lowest-index player's rational deviation.  On Unknown, unknown_player is
// the first player whose deviation solver ran out of budget.
struct NemVerdict {
  NemOutcome outcome = NemOutcome::Unknown;
  std::optional<EnergyViolation> infeasibility;
  std::optional<PositiveCycle> positive_cycle;
  std::optional<RationalDeviation> deviation;
  std::optional<int> unknown_player;
  std::vector<int> payoffs;        // per player; all zero when infeasible
  std::size_t solver_calls = 0;    // deviation solves performed
  std::size_t nodes_explored = 0;  // summed over those solves
};

// Feasibility first, then — in ascending player order — a rational-deviation
// check for every player with payoff 0.  Satisfied players are never
// candidates: a 0/1 payoff of 1 cannot be improved.
NemVerdict is_nash_equilibrium(const EbgGame& g, const Profile& profile,
                               std::size_t node_budget = kDefaultNodeBudget,
                               std::size_t automaton_cap = kDefaultAutomatonStateCap);

}  // namespace ebg

#endif  // EBG_EQUILIBRIUM_HPP_
