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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ebg/game.hpp"
#include "ebg/ltl.hpp"
#include "ebg/valuation.hpp"

namespace ebg {

// One guarded transition of a memory state: if the guard (a propositional
// formula over all atoms) matches the round's full valuation, the machine
// moves to `target`.  A missing guard is the `*` catch-all.
struct GuardedUpdate {
  std::optional<LtlFormula> guard;
  int target = 0;
};

// Deterministic finite-memory strategy for one player: a memory state picks a
// fixed valuation of the player's own atoms, and an ordered guard list maps
// the observed full valuation to the next memory state (first match fires).
class StrategyMachine {
 public:
  StrategyMachine(int owner, std::vector<std::string> state_names, int initial,
                  std::vector<Valuation> choices,
                  std::vector<std::vector<GuardedUpdate>> updates, const EbgGame& g);

  int owner() const { return owner_; }
  std::size_t state_count() const { return state_names_.size(); }
  const std::string& state_name(std::size_t m) const { return state_names_.at(m); }
  int initial() const { return initial_; }

  // The valuation of the owner's atoms chosen in memory state m.
  const Valuation& choice(std::size_t m) const { return choices_.at(m); }
  const std::vector<GuardedUpdate>& updates(std::size_t m) const { return updates_.at(m); }

  // Next memory state after observing the full round valuation.
  int update(std::size_t m, const Valuation& full) const;

 private:
  int owner_;
  std::vector<std::string> state_names_;
  int initial_;
  std::vector<Valuation> choices_;
  std::vector<std::vector<GuardedUpdate>> updates_;
};

// One machine per player, in player order.
using Profile = std::vector<StrategyMachine>;

// Rejects profiles that don't assign exactly one machine to each player in
// player order.
void check_profile(const EbgGame& g, const Profile& profile);

// The complete valuation the players jointly produce at memory tuple `mem`.
Valuation joint_choice(const EbgGame& g, const Profile& profile, const std::vector<int>& mem);

// Parses the strategy text format for player i of game g:
//   init <state>
//   state <state> choose <atom>=<true|false>[, ...]      (own atoms, total)
//   from <state> on <guard|*> goto <state>               (ordered, * = catch-all)
// Lines starting with '#' and blank lines are ignored.  Validation enforces
// exhaustive guards per state: either a catch-all is present, or (for at most
// 16 atoms) the guards must cover every valuation.
StrategyMachine parse_strategy(std::string_view text, const EbgGame& g, int player);

// The joint play of a full profile: since every machine is deterministic, the
// play is ultimately periodic.  `lasso` holds the emitted valuations;
// `memory_tuples[t]` is the joint memory before step t, for t in
// [0, |stem|+|cycle|], with the last tuple equal to the one at the cycle
// entry.
struct InducedPlay {
  Lasso lasso;
  std::vector<std::vector<int>> memory_tuples;
};

InducedPlay induced_lasso(const EbgGame& g, const Profile& profile);

// E_i(0..horizon): endowment of player i before each step, where one step
// deducts the cost of the player's chosen valuation.  Values may go negative;
// feasibility is a separate question.  Overflow-checked.
std::vector<std::int64_t> endowment_trace(const EbgGame& g, const Profile& profile, int player,
                                          std::size_t horizon);

}  // namespace ebg
