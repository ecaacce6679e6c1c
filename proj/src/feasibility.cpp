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

#include "ebg/feasibility.hpp"

#include <map>

#include "ebg/checked.hpp"
#include "ebg/errors.hpp"

namespace ebg {

ProductGraph build_product(const EbgGame& g, const std::vector<StrategyMachine>& profile) {
  check_profile(g, profile);
  const std::size_t n = profile.size();

  ProductGraph pg;
  std::map<std::vector<int>, int> seen;
  std::vector<int> mem(n);
  for (std::size_t i = 0; i < n; ++i) mem[i] = profile[i].initial();

  for (;;) {
    auto [it, fresh] = seen.try_emplace(mem, static_cast<int>(pg.tuples.size()));
    if (!fresh) {
      pg.stem_size = static_cast<std::size_t>(it->second);
      pg.next.back() = it->second;
      break;
    }
    std::vector<std::int64_t> w(n);
    for (std::size_t i = 0; i < n; ++i)
      w[i] = valuation_cost(g, profile[i].choice(static_cast<std::size_t>(mem[i])));
    Valuation letter = joint_choice(g, profile, mem);

    pg.tuples.push_back(mem);
    pg.weights.push_back(std::move(w));
    pg.next.push_back(static_cast<int>(pg.tuples.size()));  // patched at cycle closure
    for (std::size_t i = 0; i < n; ++i)
      mem[i] = profile[i].update(static_cast<std::size_t>(mem[i]), letter);
    pg.letters.push_back(std::move(letter));
  }
  return pg;
}

ExplicitArena product_arena(const ProductGraph& pg) {
  const std::size_t n = pg.weights.empty() ? 0 : pg.weights.front().size();
  ExplicitArena arena(n, 0);
  for (std::size_t v = 0; v < pg.vertex_count(); ++v) arena.add_vertex(true);
  for (std::size_t v = 0; v < pg.vertex_count(); ++v)
    arena.add_edge(static_cast<int>(v), pg.next[v], pg.weights[v]);
  return arena;
}

FeasibilityResult is_feasible(const EbgGame& g, const std::vector<StrategyMachine>& profile) {
  const ProductGraph pg = build_product(g, profile);
  const std::size_t n = g.player_count();
  const std::size_t total_len = pg.vertex_count();  // stem + one cycle round

  FeasibilityResult res;
  std::vector<std::int64_t> energy = g.endowments();

  auto step = [&](std::size_t vertex, std::int64_t t) -> bool {
    // Applies the vertex's weight; records the first violation (lowest player
    // on a tied step) and reports whether one occurred.
    int bad = -1;
    for (std::size_t i = 0; i < n; ++i) {
      energy[i] = checked_sub(energy[i], pg.weights[vertex][i]);
      if (energy[i] < 0 && bad < 0) bad = static_cast<int>(i);
    }
    if (bad < 0) return false;
    res.violation = EnergyViolation{bad, t, energy[static_cast<std::size_t>(bad)]};
    return true;
  };

  // Stem plus the first full cycle round.
  for (std::size_t t = 0; t < total_len; ++t)
    if (step(t, static_cast<std::int64_t>(t) + 1)) return res;

  // Prefix clean: the profile is feasible iff no dimension gains weight over
  // one cycle round.
  std::vector<std::int64_t> cycle_total(n, 0);
  for (std::size_t v = pg.stem_size; v < total_len; ++v)
    for (std::size_t i = 0; i < n; ++i)
      cycle_total[i] = checked_add(cycle_total[i], pg.weights[v][i]);

  int drifting = -1;
  for (std::size_t i = 0; i < n; ++i)
    if (cycle_total[i] > 0) {
      drifting = static_cast<int>(i);
      break;
    }
  if (drifting < 0) {
    res.feasible = true;
    return res;
  }
  res.positive_cycle = PositiveCycle{drifting, cycle_total[static_cast<std::size_t>(drifting)]};

  // The drift guarantees a concrete violation within
  // stem + cycle * (1 + energy at cycle entry) further steps; keep
  // simulating around the cycle until it shows up.
  std::size_t vertex = pg.stem_size;
  for (std::int64_t t = static_cast<std::int64_t>(total_len);; ++t) {
    if (step(vertex, t + 1)) return res;
    vertex = static_cast<std::size_t>(pg.next[vertex]);
  }
}

}  // namespace ebg
