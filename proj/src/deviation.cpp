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

#include "ebg/deviation.hpp"

#include <string>

#include "ebg/errors.hpp"
#include "ebg/feasibility.hpp"

namespace ebg {

DeviationGame::DeviationGame(const EbgGame& g, const Profile& profile, int deviator,
                             std::size_t automaton_cap)
    : game_(g),
      profile_(profile),
      deviator_(deviator),
      aut_(ltl_to_buchi(g.objective(static_cast<std::size_t>(deviator)), automaton_cap)) {
  check_profile(g, profile);
  if (deviator < 0 || static_cast<std::size_t>(deviator) >= g.player_count())
    throw ValidationError("deviator index out of range");

  std::vector<int> mem(g.player_count(), -1);
  for (std::size_t j = 0; j < profile.size(); ++j)
    if (static_cast<int>(j) != deviator) mem[j] = profile[j].initial();
  intern(aut_.initial, std::move(mem));
}

int DeviationGame::intern(int q, std::vector<int> mem) {
  auto [it, fresh] = ids_.try_emplace({q, std::move(mem)}, static_cast<int>(states_.size()));
  if (fresh) {
    states_.push_back(it->first);
    out_.emplace_back();
    letters_.emplace_back();
    materialized_.push_back(0);
  }
  return it->second;
}

bool DeviationGame::is_accepting(int vertex) {
  return aut_.accepting.at(static_cast<std::size_t>(automaton_state(vertex)));
}

std::span<const EnergyEdge> DeviationGame::successors(int vertex) {
  const auto v = static_cast<std::size_t>(vertex);
  if (vertex < 0 || v >= states_.size()) throw ValidationError("vertex out of range");
  if (materialized_[v]) return out_[v];
  materialized_[v] = 1;

  const auto [q, mem] = states_[v];
  const std::size_t n = game_.player_count();
  const auto i = static_cast<std::size_t>(deviator_);

  // The others' contribution is fixed by their memories: both the forced
  // part of the valuation and their cost dimensions.
  Valuation forced{game_.atoms()};
  std::vector<std::int64_t> base_cost(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    const Valuation& ch = profile_[j].choice(static_cast<std::size_t>(mem[j]));
    for (const auto& a : ch.atoms()) forced.set(a, ch.value(a));
    base_cost[j] = valuation_cost(game_, ch);
  }

  std::vector<EnergyEdge> edges;
  std::vector<Valuation> letters;
  for (const Valuation& own : enumerate_valuations(game_.atoms_of_player(i))) {
    Valuation x = forced;
    for (const auto& a : own.atoms()) x.set(a, own.value(a));
    const Valuation label = x.restricted_to(aut_.alphabet);

    std::vector<std::int64_t> cost = base_cost;
    cost[i] = valuation_cost(game_, own);

    for (const auto& edge : aut_.out[static_cast<std::size_t>(q)]) {
      if (edge.label != label) continue;
      std::vector<int> next_mem(n, -1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) next_mem[j] = profile_[j].update(static_cast<std::size_t>(mem[j]), x);
      edges.push_back({cost, intern(edge.target, std::move(next_mem))});
      letters.push_back(x);
    }
  }
  out_[v] = std::move(edges);
  letters_[v] = std::move(letters);
  return out_[v];
}

StrategyMachine deviation_to_strategy(const DeviationGame& dg, const EnergyWitness& w) {
  const std::size_t k = w.stem_edges.size();
  const std::size_t m = w.segment_edges.size();
  if (m == 0) throw ValidationError("witness segment is empty");

  const auto& own_atoms =
      dg.game().atoms_of_player(static_cast<std::size_t>(dg.deviator()));

  std::vector<std::string> names;
  std::vector<Valuation> choices;
  std::vector<std::vector<GuardedUpdate>> updates;
  auto add_state = [&](const Valuation& letter, int next) {
    names.push_back("d" + std::to_string(names.size()));
    choices.push_back(letter.restricted_to(own_atoms));
    updates.push_back({GuardedUpdate{std::nullopt, next}});
  };

  for (std::size_t t = 0; t < k; ++t)
    add_state(dg.edge_letter(w.stem[t], w.stem_edges[t]), static_cast<int>(t) + 1);
  for (std::size_t t = 0; t < m; ++t) {
    const int next = t + 1 < m ? static_cast<int>(k + t) + 1 : static_cast<int>(k);
    add_state(dg.edge_letter(w.segment[t], w.segment_edges[t]), next);
  }
  return StrategyMachine(dg.deviator(), std::move(names), 0, std::move(choices),
                         std::move(updates), dg.game());
}

DeviationResult has_rational_deviation(const EbgGame& g, const Profile& profile, int deviator,
                                       std::size_t node_budget, std::size_t automaton_cap) {
  check_profile(g, profile);
  if (deviator < 0 || static_cast<std::size_t>(deviator) >= g.player_count())
    throw ValidationError("deviator index out of range");

  const FeasibilityResult feas = is_feasible(g, profile);
  if (!feas.feasible)
    throw ValidationError("profile is infeasible; deviation queries require a feasible profile");
  const InducedPlay play = induced_lasso(g, profile);
  if (eval_lasso(g.objective(static_cast<std::size_t>(deviator)), play.lasso))
    throw ValidationError("player '" + g.player_name(static_cast<std::size_t>(deviator)) +
                          "' already attains payoff 1; no deviation can improve it");

  DeviationGame dg(g, profile, deviator, automaton_cap);
  EnergyResult solved = solve_energy_buchi(dg, g.endowments(), node_budget);

  DeviationResult result;
  result.verdict = solved.verdict;
  result.nodes_explored = solved.nodes_explored;
  if (solved.verdict != Verdict::Yes) return result;

  RationalDeviation dev{deviator, solved.witness, {}, {},
                        deviation_to_strategy(dg, solved.witness)};
  for (std::size_t t = 0; t < solved.witness.stem_edges.size(); ++t)
    dev.stem_letters.push_back(
        dg.edge_letter(solved.witness.stem[t], solved.witness.stem_edges[t]));
  for (std::size_t t = 0; t < solved.witness.segment_edges.size(); ++t)
    dev.segment_letters.push_back(
        dg.edge_letter(solved.witness.segment[t], solved.witness.segment_edges[t]));

  // Independent re-check: the extracted machine must actually win.
  Profile changed = profile;
  changed[static_cast<std::size_t>(deviator)] = dev.machine;
  if (!is_feasible(g, changed).feasible)
    throw Error("internal: extracted deviation is not feasible on replay");
  if (!eval_lasso(g.objective(static_cast<std::size_t>(deviator)),
                  induced_lasso(g, changed).lasso))
    throw Error("internal: extracted deviation does not satisfy the objective on replay");

  result.deviation = std::move(dev);
  return result;
}

}  // namespace ebg
