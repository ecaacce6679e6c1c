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

#ifndef EBG_DEVIATION_HPP_
#define EBG_DEVIATION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ebg/buchi.hpp"
#include "ebg/energy.hpp"
#include "ebg/game.hpp"
#include "ebg/strategy.hpp"

namespace ebg {

// One-player energy-Buchi game describing everything player `deviator` can
// do against the fixed machines of the others.  A vertex pairs a state of
// the objective automaton with the other players' memories; an edge exists
// for every complete valuation X that (i) drives the automaton, (ii) agrees
// with each other player's prescribed choice, with (iii) the memories
// advancing under X.  The deviator's own atoms are unconstrained.  Edge
// costs: dimension j != deviator is the cost of player j's prescribed
// valuation, dimension deviator the cost of X on the deviator's atoms.
//
// Vertices are materialized on first access; enumeration order is fixed
// (deviator valuations in binary counting order, then automaton edges in
// automaton order), so search results are reproducible.
class DeviationGame final : public EnergyArena {
 public:
  // The game and profile must outlive this object.
  DeviationGame(const EbgGame& g, const Profile& profile, int deviator,
                std::size_t automaton_cap = kDefaultAutomatonStateCap);

  std::size_t dimension() const override { return game_.player_count(); }
  int initial_vertex() const override { return 0; }
  std::span<const EnergyEdge> successors(int vertex) override;
  bool is_accepting(int vertex) override;

  int deviator() const { return deviator_; }
  const EbgGame& game() const { return game_; }
  const BuchiAutomaton& automaton() const { return aut_; }
  std::size_t vertex_count() const { return states_.size(); }
  int automaton_state(int vertex) const { return states_.at(static_cast<std::size_t>(vertex)).first; }
  // Other players' memories; the deviator's slot holds -1.
  const std::vector<int>& memories(int vertex) const {
    return states_.at(static_cast<std::size_t>(vertex)).second;
  }
  // The complete valuation labeling the given outgoing edge (the edge's
  // vertex must have been materialized, which holds for any solver witness).
  const Valuation& edge_letter(int vertex, int edge) const {
    return letters_.at(static_cast<std::size_t>(vertex)).at(static_cast<std::size_t>(edge));
  }

 private:
  int intern(int q, std::vector<int> mem);

  const EbgGame& game_;
  const Profile& profile_;
  int deviator_;
  BuchiAutomaton aut_;
  std::map<std::pair<int, std::vector<int>>, int> ids_;
  std::vector<std::pair<int, std::vector<int>>> states_;
  std::vector<std::vector<EnergyEdge>> out_;
  std::vector<std::vector<Valuation>> letters_;
  std::vector<char> materialized_;
};

// A profitable and feasible unilateral change of strategy: the witness lasso
// in the deviation game plus the finite-memory machine that replays it.
struct RationalDeviation {
  int deviator = 0;
  EnergyWitness witness;
  std::vector<Valuation> stem_letters;     // complete valuation per stem step
  std::vector<Valuation> segment_letters;  // per segment step
  StrategyMachine machine;
};

struct DeviationResult {
  Verdict verdict = Verdict::Unknown;  // Yes: a rational deviation exists
  std::optional<RationalDeviation> deviation;
  std::size_t nodes_explored = 0;
};

// Decides whether the deviator (who must currently have payoff 0 under the
// feasible profile; anything else is a ValidationError) can unilaterally
// reach payoff 1.  A Yes answer always carries a machine that has passed an
// independent re-check: simulating (machine, profile_{-deviator}) yields a
// feasible play satisfying the deviator's objective.
DeviationResult has_rational_deviation(const EbgGame& g, const Profile& profile, int deviator,
                                       std::size_t node_budget = kDefaultNodeBudget,
                                       std::size_t automaton_cap = kDefaultAutomatonStateCap);

// Materializes the winning play as a machine: one memory state per witness
// step, choices read off the edge valuations restricted to the deviator's
// atoms, updates advancing stem then segment in a loop (catch-all guards).
StrategyMachine deviation_to_strategy(const DeviationGame& dg, const EnergyWitness& witness);

}  // namespace ebg

#endif  // EBG_DEVIATION_HPP_
