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

#ifndef EBG_ENERGY_HPP_
#define EBG_ENERGY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ebg {

// One-player multi-dimensional energy games with a Buchi condition.  A play
// starts at the initial vertex with the credit vector, every edge subtracts
// its cost vector from the energy, and the play is winning when the energy
// stays componentwise nonnegative forever while visiting accepting vertices
// infinitely often.
//
// Winning runs always admit a finite certificate: a stem followed by a
// segment that returns to its first vertex with componentwise no less energy
// and visits an accepting vertex.  Replaying the segment forever never drops
// below the first iteration, so the certificate can be checked by direct
// replay (see verify_energy_witness).

struct EnergyEdge {
  std::vector<std::int64_t> cost;  // subtracted from the energy, one entry per dimension
  int target = 0;
};

// Successor access is non-const so implementations can materialize vertices
// on demand; vertex ids must be dense and stable once handed out.  Returned
// spans must stay valid for the lifetime of the arena.
class EnergyArena {
 public:
  virtual ~EnergyArena() = default;
  virtual std::size_t dimension() const = 0;
  virtual int initial_vertex() const = 0;
  virtual std::span<const EnergyEdge> successors(int vertex) = 0;
  virtual bool is_accepting(int vertex) = 0;
};

// Fully materialized arena for product graphs and tests.
class ExplicitArena final : public EnergyArena {
 public:
  ExplicitArena(std::size_t dimension, int initial) : dim_(dimension), initial_(initial) {}

  int add_vertex(bool accepting) {
    accepting_.push_back(accepting);
    out_.emplace_back();
    return static_cast<int>(out_.size()) - 1;
  }
  void add_edge(int from, int to, std::vector<std::int64_t> cost);

  std::size_t dimension() const override { return dim_; }
  int initial_vertex() const override { return initial_; }
  std::span<const EnergyEdge> successors(int vertex) override;
  bool is_accepting(int vertex) override;
  std::size_t vertex_count() const { return out_.size(); }

 private:
  std::size_t dim_;
  int initial_;
  std::vector<std::vector<EnergyEdge>> out_;
  std::vector<char> accepting_;
};

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

// Stem and segment are vertex sequences; stem starts at the initial vertex,
// segment starts and ends at stem.back().  The edge lists give, for each
// step, the index into successors() of the edge taken, so a witness can be
// replayed against the arena it came from.
struct EnergyWitness {
  std::vector<int> stem;           // v_0 .. v_k
  std::vector<int> stem_edges;     // k entries
  std::vector<int> segment;        // v_k .. v_k (length m+1, m >= 1)
  std::vector<int> segment_edges;  // m entries
};

struct EnergyResult {
  Verdict verdict = Verdict::Unknown;
  EnergyWitness witness;           // populated iff verdict == Yes
  std::size_t nodes_explored = 0;
};

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

// Decides the energy-Buchi game.  Yes and No are definitive; Unknown means
// the node budget ran out first.  Yes results carry a witness that has
// already passed verify_energy_witness.
//
// The search first runs a coverability phase: a depth-first tree over
// (vertex, energy) pairs where a strict energy gain around a loop with no
// accepting visit lifts the grown dimensions to an "unbounded" marker, an
// exact repeat with no accepting visit prunes, and a comparable repeat with
// an accepting visit in between reports a candidate.  Exhaustion of that
// tree refutes the game.  Candidates are then made concrete by an
// iterative-deepening search on exact energies, which terminates because
// the coverability phase only reports when a finite certificate exists.
EnergyResult solve_energy_buchi(EnergyArena& arena,
                                const std::vector<std::int64_t>& credit,
                                std::size_t node_budget = kDefaultNodeBudget);

// Same search with every vertex treated as accepting: decides whether some
// reachable cycle keeps the energy nonnegative and does not decrease it over
// one turn.
EnergyResult find_nonnegative_reachable_cycle(EnergyArena& arena,
                                              const std::vector<std::int64_t>& credit,
                                              std::size_t node_budget = kDefaultNodeBudget);

// Replays the witness: stem edges must exist and keep the energy
// nonnegative, the segment must close on its first vertex, visit an
// accepting vertex, and three consecutive replays must each end with at
// least the energy they started with.  On failure *why (when given)
// receives a description.
bool verify_energy_witness(EnergyArena& arena,
                           const std::vector<std::int64_t>& credit,
                           const EnergyWitness& witness,
                           std::string* why = nullptr);

}  // namespace ebg

#endif  // EBG_ENERGY_HPP_
