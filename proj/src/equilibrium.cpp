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

#include "ebg/equilibrium.hpp"

#include "ebg/errors.hpp"

namespace ebg {

int payoff(const EbgGame& g, const Profile& profile, int player) {
  check_profile(g, profile);
  if (player < 0 || static_cast<std::size_t>(player) >= g.player_count())
    throw ValidationError("player index out of range");
  if (!is_feasible(g, profile).feasible) return 0;
  return eval_lasso(g.objective(static_cast<std::size_t>(player)),
                    induced_lasso(g, profile).lasso)
             ? 1
             : 0;
}

NemVerdict is_nash_equilibrium(const EbgGame& g, const Profile& profile,
                               std::size_t node_budget, std::size_t automaton_cap) {
  check_profile(g, profile);
  NemVerdict verdict;
  verdict.payoffs.assign(g.player_count(), 0);

  const FeasibilityResult feas = is_feasible(g, profile);
  if (!feas.feasible) {
    verdict.outcome = NemOutcome::NotEquilibrium;
    verdict.infeasibility = feas.violation;
    verdict.positive_cycle = feas.positive_cycle;
    return verdict;
  }

  const InducedPlay play = induced_lasso(g, profile);
  for (std::size_t i = 0; i < g.player_count(); ++i)
    verdict.payoffs[i] = eval_lasso(g.objective(i), play.lasso) ? 1 : 0;

  for (std::size_t i = 0; i < g.player_count(); ++i) {
    if (verdict.payoffs[i] == 1) continue;
    DeviationResult dev =
        has_rational_deviation(g, profile, static_cast<int>(i), node_budget, automaton_cap);
    ++verdict.solver_calls;
    verdict.nodes_explored += dev.nodes_explored;
    if (dev.verdict == Verdict::Yes) {
      verdict.outcome = NemOutcome::NotEquilibrium;
      verdict.deviation = std::move(dev.deviation);
      return verdict;
    }
    if (dev.verdict == Verdict::Unknown && !verdict.unknown_player)
      verdict.unknown_player = static_cast<int>(i);
  }

  verdict.outcome = verdict.unknown_player ? NemOutcome::Unknown : NemOutcome::Equilibrium;
  return verdict;
}

}  // namespace ebg
