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

#include "ebg/energy.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "ebg/checked.hpp"
#include "ebg/errors.hpp"

namespace ebg {

namespace {

// Marker for a dimension the coverability phase has proven pumpable to any
// height.  Exact energies that would reach the marker overflow instead, so
// the two can never be confused.
constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

std::int64_t step_energy(std::int64_t energy, std::int64_t cost) {
  if (energy == kUnbounded) return kUnbounded;
  std::int64_t next = checked_sub(energy, cost);
  if (next == kUnbounded) throw OverflowError("energy value exceeds the representable range");
  return next;
}

bool geq(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (std::size_t d = 0; d < a.size(); ++d)
    if (a[d] < b[d]) return false;
  return true;
}

struct SearchNode {
  int vertex;
  std::vector<std::int64_t> energy;
  long acc_count;          // accepting vertices on the path up to and including this one
  std::size_t edge_cursor;  // next successor index to try
  int via_edge;             // successor index taken from the parent; -1 at the root
};

struct PathStack {
  std::vector<SearchNode> path;
  std::unordered_map<int, std::vector<std::size_t>> at_vertex;

  void push(int vertex, std::vector<std::int64_t> energy, long acc, int via) {
    path.push_back({vertex, std::move(energy), acc, 0, via});
    at_vertex[vertex].push_back(path.size() - 1);
  }
  void pop() {
    at_vertex[path.back().vertex].pop_back();
    path.pop_back();
  }
};

struct PhaseAOutcome {
  Verdict verdict = Verdict::No;
  std::size_t explored = 0;
  std::size_t depth_hint = 0;
};

// Coverability tree.  Exhaustion without a candidate refutes the game: any
// certificate would reach a comparable ancestor pair with an accepting visit
// in between, and pruning only removes exact repeats whose continuation the
// surviving ancestor explores verbatim with a strictly shorter path.
PhaseAOutcome run_coverability(EnergyArena& arena,
                               const std::vector<std::int64_t>& credit,
                               std::size_t budget) {
  PhaseAOutcome out;
  for (std::int64_t c : credit)
    if (c < 0) return out;

  PathStack st;
  const int root = arena.initial_vertex();
  st.push(root, credit, arena.is_accepting(root) ? 1 : 0, -1);
  ++out.explored;

  while (!st.path.empty()) {
    if (out.explored > budget) {
      out.verdict = Verdict::Unknown;
      return out;
    }
    const std::size_t ti = st.path.size() - 1;
    auto succ = arena.successors(st.path[ti].vertex);
    if (st.path[ti].edge_cursor == succ.size()) {
      st.pop();
      continue;
    }
    const int ei = static_cast<int>(st.path[ti].edge_cursor++);
    const EnergyEdge& edge = succ[static_cast<std::size_t>(ei)];

    std::vector<std::int64_t> energy(arena.dimension());
    bool negative = false;
    for (std::size_t d = 0; d < energy.size(); ++d) {
      energy[d] = step_energy(st.path[ti].energy[d], edge.cost[d]);
      if (energy[d] < 0) {
        negative = true;
        break;
      }
    }
    if (negative) continue;

    const int v = edge.target;
    const long acc = st.path[ti].acc_count + (arena.is_accepting(v) ? 1 : 0);

    // Compare against ancestors at the same vertex.  A strict gain around a
    // loop with no accepting visit makes the grown dimensions unbounded
    // (replaying that loop realizes any height without lowering the rest);
    // lifting can enable further comparisons, so iterate to a fixpoint.
    bool detected = false;
    bool cut = false;
    {
      auto it = st.at_vertex.find(v);
      const std::vector<std::size_t>* anc = it == st.at_vertex.end() ? nullptr : &it->second;
      bool changed = anc != nullptr && !anc->empty();
      while (changed) {
        changed = false;
        for (auto ai = anc->rbegin(); ai != anc->rend() && !detected; ++ai)
          if (geq(energy, st.path[*ai].energy) && acc > st.path[*ai].acc_count) detected = true;
        if (detected) break;
        for (auto ai = anc->rbegin(); ai != anc->rend() && !cut; ++ai)
          if (energy == st.path[*ai].energy) cut = true;
        if (cut) break;
        for (std::size_t pi : *anc) {
          if (!geq(energy, st.path[pi].energy)) continue;
          for (std::size_t d = 0; d < energy.size(); ++d)
            if (energy[d] > st.path[pi].energy[d] && energy[d] != kUnbounded) {
              energy[d] = kUnbounded;
              changed = true;
            }
        }
      }
    }
    if (detected) {
      ++out.explored;
      out.verdict = Verdict::Yes;
      out.depth_hint = st.path.size();
      return out;
    }
    if (cut) continue;
    st.push(v, std::move(energy), acc, ei);
    ++out.explored;
  }
  return out;
}

struct PhaseBOutcome {
  bool found = false;
  bool out_of_budget = false;
  EnergyWitness witness;
  std::size_t explored = 0;
};

// Iterative deepening over exact energies.  A candidate from the
// coverability phase guarantees some finite certificate, so a deep enough
// round finds one; rounds that never hit the depth limit have seen the whole
// (pruned) tree and settle the question outright.
PhaseBOutcome materialize_witness(EnergyArena& arena,
                                  const std::vector<std::int64_t>& credit,
                                  std::size_t budget,
                                  std::size_t start_depth) {
  PhaseBOutcome out;
  for (std::size_t limit = std::max<std::size_t>(start_depth, 8);; limit *= 2) {
    PathStack st;
    bool truncated = false;
    const int root = arena.initial_vertex();
    st.push(root, credit, arena.is_accepting(root) ? 1 : 0, -1);
    ++out.explored;

    while (!st.path.empty()) {
      if (out.explored > budget) {
        out.out_of_budget = true;
        return out;
      }
      const std::size_t ti = st.path.size() - 1;
      auto succ = arena.successors(st.path[ti].vertex);
      if (st.path[ti].edge_cursor == succ.size()) {
        st.pop();
        continue;
      }
      if (ti >= limit) {
        truncated = true;
        st.pop();
        continue;
      }
      const int ei = static_cast<int>(st.path[ti].edge_cursor++);
      const EnergyEdge& edge = succ[static_cast<std::size_t>(ei)];

      std::vector<std::int64_t> energy(arena.dimension());
      bool negative = false;
      for (std::size_t d = 0; d < energy.size(); ++d) {
        energy[d] = step_energy(st.path[ti].energy[d], edge.cost[d]);
        if (energy[d] < 0) {
          negative = true;
          break;
        }
      }
      if (negative) continue;

      const int v = edge.target;
      const long acc = st.path[ti].acc_count + (arena.is_accepting(v) ? 1 : 0);

      bool cut = false;
      std::size_t anchor = 0;
      bool have_anchor = false;
      if (auto it = st.at_vertex.find(v); it != st.at_vertex.end()) {
        for (auto ai = it->second.rbegin(); ai != it->second.rend(); ++ai) {
          if (!geq(energy, st.path[*ai].energy)) continue;
          if (acc > st.path[*ai].acc_count) {
            anchor = *ai;
            have_anchor = true;
            break;
          }
          if (energy == st.path[*ai].energy) {
            cut = true;
            break;
          }
        }
      }
      if (have_anchor) {
        EnergyWitness& w = out.witness;
        for (std::size_t i = 0; i <= anchor; ++i) w.stem.push_back(st.path[i].vertex);
        for (std::size_t i = 1; i <= anchor; ++i) w.stem_edges.push_back(st.path[i].via_edge);
        for (std::size_t i = anchor; i < st.path.size(); ++i) w.segment.push_back(st.path[i].vertex);
        w.segment.push_back(v);
        for (std::size_t i = anchor + 1; i < st.path.size(); ++i)
          w.segment_edges.push_back(st.path[i].via_edge);
        w.segment_edges.push_back(ei);
        out.found = true;
        ++out.explored;
        return out;
      }
      if (cut) continue;
      st.push(v, std::move(energy), acc, ei);
      ++out.explored;
    }
    if (!truncated) return out;  // whole tree seen: no certificate at any depth
  }
}

class AllAcceptingView final : public EnergyArena {
 public:
  explicit AllAcceptingView(EnergyArena& inner) : inner_(inner) {}
  std::size_t dimension() const override { return inner_.dimension(); }
  int initial_vertex() const override { return inner_.initial_vertex(); }
  std::span<const EnergyEdge> successors(int vertex) override { return inner_.successors(vertex); }
  bool is_accepting(int) override { return true; }

 private:
  EnergyArena& inner_;
};

}  // namespace

void ExplicitArena::add_edge(int from, int to, std::vector<std::int64_t> cost) {
  if (from < 0 || static_cast<std::size_t>(from) >= out_.size() || to < 0 ||
      static_cast<std::size_t>(to) >= out_.size())
    throw ValidationError("edge endpoint out of range");
  if (cost.size() != dim_) throw ValidationError("edge cost has wrong dimension");
  out_[static_cast<std::size_t>(from)].push_back({std::move(cost), to});
}

std::span<const EnergyEdge> ExplicitArena::successors(int vertex) {
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= out_.size())
    throw ValidationError("vertex out of range");
  return out_[static_cast<std::size_t>(vertex)];
}

bool ExplicitArena::is_accepting(int vertex) {
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= accepting_.size())
    throw ValidationError("vertex out of range");
  return accepting_[static_cast<std::size_t>(vertex)] != 0;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    default:
      return "unknown";
  }
}

EnergyResult solve_energy_buchi(EnergyArena& arena,
                                const std::vector<std::int64_t>& credit,
                                std::size_t node_budget) {
  if (credit.size() != arena.dimension())
    throw ValidationError("credit vector has wrong dimension");

  EnergyResult result;
  PhaseAOutcome a = run_coverability(arena, credit, node_budget);
  result.nodes_explored = a.explored;
  if (a.verdict != Verdict::Yes) {
    result.verdict = a.verdict;
    return result;
  }

  const std::size_t remaining = node_budget > a.explored ? node_budget - a.explored : 0;
  PhaseBOutcome b = materialize_witness(arena, credit, remaining, a.depth_hint);
  result.nodes_explored += b.explored;
  if (b.found) {
    std::string why;
    if (!verify_energy_witness(arena, credit, b.witness, &why))
      throw Error("internal: energy witness failed replay: " + why);
    result.verdict = Verdict::Yes;
    result.witness = std::move(b.witness);
    return result;
  }
  if (b.out_of_budget) {
    result.verdict = Verdict::Unknown;
    return result;
  }
  throw Error("internal: coverability reported a candidate but no certificate exists");
}

EnergyResult find_nonnegative_reachable_cycle(EnergyArena& arena,
                                              const std::vector<std::int64_t>& credit,
                                              std::size_t node_budget) {
  AllAcceptingView view(arena);
  return solve_energy_buchi(view, credit, node_budget);
}

bool verify_energy_witness(EnergyArena& arena,
                           const std::vector<std::int64_t>& credit,
                           const EnergyWitness& w,
                           std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (credit.size() != arena.dimension()) return fail("credit has wrong dimension");
  if (w.stem.empty() || w.stem.front() != arena.initial_vertex())
    return fail("stem does not start at the initial vertex");
  if (w.stem_edges.size() + 1 != w.stem.size()) return fail("stem edge list has wrong length");
  if (w.segment.size() < 2) return fail("segment is empty");
  if (w.segment_edges.size() + 1 != w.segment.size())
    return fail("segment edge list has wrong length");
  if (w.segment.front() != w.stem.back() || w.segment.back() != w.segment.front())
    return fail("segment does not close on the stem's last vertex");

  std::vector<std::int64_t> energy = credit;
  for (std::int64_t e : energy)
    if (e < 0) return fail("initial credit is negative");

  auto take = [&](int from, int edge_index, int expect_target) -> bool {
    auto succ = arena.successors(from);
    if (edge_index < 0 || static_cast<std::size_t>(edge_index) >= succ.size()) return false;
    const EnergyEdge& e = succ[static_cast<std::size_t>(edge_index)];
    if (e.target != expect_target) return false;
    for (std::size_t d = 0; d < energy.size(); ++d) {
      energy[d] = step_energy(energy[d], e.cost[d]);
      if (energy[d] < 0) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < w.stem_edges.size(); ++i)
    if (!take(w.stem[i], w.stem_edges[i], w.stem[i + 1]))
      return fail("stem replay failed at step " + std::to_string(i));

  bool accepting_seen = false;
  for (std::size_t i = 0; i + 1 < w.segment.size(); ++i)
    if (arena.is_accepting(w.segment[i])) accepting_seen = true;
  if (!accepting_seen) return fail("segment visits no accepting vertex");

  for (int replay = 0; replay < 3; ++replay) {
    const std::vector<std::int64_t> at_start = energy;
    for (std::size_t i = 0; i < w.segment_edges.size(); ++i)
      if (!take(w.segment[i], w.segment_edges[i], w.segment[i + 1]))
        return fail("segment replay " + std::to_string(replay) + " failed at step " +
                    std::to_string(i));
    if (!geq(energy, at_start))
      return fail("segment replay " + std::to_string(replay) + " lost energy");
  }
  return true;
}

}  // namespace ebg
