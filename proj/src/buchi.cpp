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

#include "ebg/buchi.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "ebg/errors.hpp"

namespace ebg {

namespace {

// Closure-based construction.  The closure is the set of distinct subformulas
// (structural identity).  A candidate state assigns a truth value to every
// closure member; assignments to atoms, X-, U-, F- and G-nodes are free, the
// boolean connectives are derived bottom-up.  A state is kept when the local
// until/eventually/always constraints hold:
//     b in B            =>  aUb in B         a in B  => Fa in B
//     aUb in B, b not   =>  a in B           Ga in B => a in B
// Two states B -> B' are transition-consistent when
//     Xa  in B  <=>  a in B'
//     aUb in B  <=>  b in B  or (a in B and aUb in B')
//     Fa  in B  <=>  a in B  or Fa in B'
//     Ga  in B  <=>  a in B and Ga in B'
// and the edge is labeled by B''s atom valuation (a state constrains the
// letter read on entry).  One generalized acceptance set per U/F/G node
// forbids postponing an obligation forever.

struct Closure {
  std::vector<LtlFormula> nodes;          // post-order: operands before users
  std::map<std::string, std::size_t> index_by_text;
  std::vector<std::size_t> atom_nodes;    // closure indices, sorted by atom name
  std::vector<std::size_t> free_nodes;    // atoms + X/U/F/G, assignment order
  std::vector<std::size_t> temporal_nodes;  // U/F/G only (acceptance sets)

  std::size_t index_of(const LtlFormula& f) const { return index_by_text.at(f.to_string()); }
};

void collect_closure(const LtlFormula& f, Closure& c) {
  switch (f.kind()) {
    case LtlKind::Atom:
      break;
    case LtlKind::Not:
    case LtlKind::Next:
    case LtlKind::Eventually:
    case LtlKind::Always:
      collect_closure(f.left(), c);
      break;
    default:
      collect_closure(f.left(), c);
      collect_closure(f.right(), c);
      break;
  }
  std::string key = f.to_string();
  if (c.index_by_text.count(key)) return;
  c.index_by_text.emplace(std::move(key), c.nodes.size());
  c.nodes.push_back(f);
}

using Membership = std::vector<char>;  // per closure index

struct StateTable {
  Closure closure;
  std::vector<Membership> states;           // elementary states only
  std::vector<std::uint64_t> label_bits;    // atom bits per state, by sorted atom order
  std::size_t root_index = 0;
};

// Derives boolean-connective memberships from the free assignments; returns
// false when a local temporal constraint fails.
bool complete_membership(const Closure& c, Membership& m) {
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    const LtlFormula& f = c.nodes[k];
    switch (f.kind()) {
      case LtlKind::Not:
        m[k] = !m[c.index_of(f.left())];
        break;
      case LtlKind::And:
        m[k] = m[c.index_of(f.left())] && m[c.index_of(f.right())];
        break;
      case LtlKind::Or:
        m[k] = m[c.index_of(f.left())] || m[c.index_of(f.right())];
        break;
      case LtlKind::Implies:
        m[k] = !m[c.index_of(f.left())] || m[c.index_of(f.right())];
        break;
      default:
        break;  // free nodes were assigned up front
    }
  }
  for (std::size_t k : c.temporal_nodes) {
    const LtlFormula& f = c.nodes[k];
    switch (f.kind()) {
      case LtlKind::Until: {
        char b = m[c.index_of(f.right())];
        if (b && !m[k]) return false;
        if (m[k] && !b && !m[c.index_of(f.left())]) return false;
        break;
      }
      case LtlKind::Eventually:
        if (m[c.index_of(f.left())] && !m[k]) return false;
        break;
      case LtlKind::Always:
        if (m[k] && !m[c.index_of(f.left())]) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

bool transition_consistent(const Closure& c, const Membership& from, const Membership& to) {
  for (std::size_t k : c.free_nodes) {
    const LtlFormula& f = c.nodes[k];
    switch (f.kind()) {
      case LtlKind::Next:
        if (from[k] != to[c.index_of(f.left())]) return false;
        break;
      case LtlKind::Until: {
        char expect = from[c.index_of(f.right())] ||
                      (from[c.index_of(f.left())] && to[k]);
        if (from[k] != expect) return false;
        break;
      }
      case LtlKind::Eventually: {
        char expect = from[c.index_of(f.left())] || to[k];
        if (from[k] != expect) return false;
        break;
      }
      case LtlKind::Always: {
        char expect = from[c.index_of(f.left())] && to[k];
        if (from[k] != expect) return false;
        break;
      }
      default:
        break;
    }
  }
  return true;
}

// Obligation discharged: being in the set means the state does not owe the
// acceptance-set's witness.
bool acceptance_ok(const Closure& c, std::size_t temporal, const Membership& m) {
  const LtlFormula& f = c.nodes[temporal];
  switch (f.kind()) {
    case LtlKind::Until:
      return !m[temporal] || m[c.index_of(f.right())];
    case LtlKind::Eventually:
      return !m[temporal] || m[c.index_of(f.left())];
    case LtlKind::Always:
      return m[temporal] || !m[c.index_of(f.left())];
    default:
      return true;
  }
}

StateTable build_state_table(const LtlFormula& f, std::size_t max_states) {
  StateTable t;
  collect_closure(f, t.closure);
  Closure& c = t.closure;
  t.root_index = c.index_of(f);

  std::map<std::string, std::size_t> atom_to_node;
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    switch (c.nodes[k].kind()) {
      case LtlKind::Atom:
        atom_to_node[c.nodes[k].atom_name()] = k;
        break;
      case LtlKind::Next:
      case LtlKind::Until:
      case LtlKind::Eventually:
      case LtlKind::Always:
        c.free_nodes.push_back(k);
        if (c.nodes[k].kind() != LtlKind::Next) c.temporal_nodes.push_back(k);
        break;
      default:
        break;
    }
  }
  for (const auto& [name, k] : atom_to_node) {
    (void)name;
    c.atom_nodes.push_back(k);
    c.free_nodes.push_back(k);
  }

  const std::size_t bits = c.free_nodes.size();
  if (bits >= 62 || (std::uint64_t{1} << bits) > max_states)
    throw LimitError("formula needs more than " + std::to_string(max_states) +
                     " automaton states");
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    Membership m(c.nodes.size(), 0);
    for (std::size_t j = 0; j < bits; ++j)
      m[c.free_nodes[j]] = static_cast<char>((assignment >> j) & 1u);
    if (!complete_membership(c, m)) continue;
    std::uint64_t label = 0;
    for (std::size_t j = 0; j < c.atom_nodes.size(); ++j)
      if (m[c.atom_nodes[j]]) label |= std::uint64_t{1} << j;
    t.states.push_back(std::move(m));
    t.label_bits.push_back(label);
    if (t.states.size() > max_states)
      throw LimitError("formula needs more than " + std::to_string(max_states) +
                       " automaton states");
  }
  return t;
}

}  // namespace

BuchiAutomaton ltl_to_buchi(const LtlFormula& f, std::size_t max_states) {
  StateTable table = build_state_table(f, max_states);
  const Closure& c = table.closure;
  const std::size_t n = table.states.size();
  const std::size_t k_sets = c.temporal_nodes.size();

  std::vector<std::string> alphabet;
  for (std::size_t k : c.atom_nodes) alphabet.push_back(c.nodes[k].atom_name());

  std::vector<Valuation> labels;
  labels.reserve(n);
  for (std::size_t s = 0; s < n; ++s)
    labels.push_back(Valuation::from_index(alphabet, table.label_bits[s]));

  // Degeneralized state = (elementary state, obligation counter); counter i
  // advances when the source state discharges acceptance set i, and the NBA
  // accepting set is {counter 0 and set 0 discharged}.  With no temporal
  // nodes every state is accepting.
  struct Key {
    std::size_t state;
    std::size_t track;
    bool operator<(const Key& o) const {
      return state != o.state ? state < o.state : track < o.track;
    }
  };

  BuchiAutomaton aut;
  aut.alphabet = alphabet;
  aut.initial = 0;
  aut.out.emplace_back();       // state 0 = fresh initial state
  aut.accepting.push_back(false);

  std::map<Key, int> ids;
  std::queue<Key> work;
  auto intern = [&](Key key) {
    auto [it, fresh] = ids.try_emplace(key, static_cast<int>(aut.out.size()));
    if (fresh) {
      if (aut.out.size() >= max_states)
        throw LimitError("formula needs more than " + std::to_string(max_states) +
                         " automaton states");
      aut.out.emplace_back();
      bool acc = k_sets == 0 ||
                 (key.track == 0 && acceptance_ok(c, c.temporal_nodes[0], table.states[key.state]));
      aut.accepting.push_back(acc);
      work.push(key);
    }
    return it->second;
  };

  // intern() may grow aut.out, so resolve the target id before indexing.
  for (std::size_t s = 0; s < n; ++s) {
    if (!table.states[s][table.root_index]) continue;
    const int tgt = intern({s, 0});
    aut.out[0].push_back({labels[s], tgt});
  }

  while (!work.empty()) {
    Key key = work.front();
    work.pop();
    const int src = ids.at(key);
    std::size_t next_track = key.track;
    if (k_sets > 0 && acceptance_ok(c, c.temporal_nodes[key.track], table.states[key.state]))
      next_track = (key.track + 1) % k_sets;
    for (std::size_t s2 = 0; s2 < n; ++s2) {
      if (!transition_consistent(c, table.states[key.state], table.states[s2])) continue;
      const int tgt = intern({s2, next_track});
      aut.out[src].push_back({labels[s2], tgt});
    }
  }
  return aut;
}

std::string BuchiAutomaton::to_adjacency_text() const {
  std::ostringstream os;
  os << "states " << state_count() << " initial " << initial << " alphabet";
  for (const auto& a : alphabet) os << ' ' << a;
  os << '\n';
  for (std::size_t s = 0; s < out.size(); ++s)
    for (const auto& e : out[s])
      os << s << " -- " << e.label.to_string() << " -> " << e.target << '\n';
  os << "accepting";
  for (std::size_t s = 0; s < accepting.size(); ++s)
    if (accepting[s]) os << ' ' << s;
  os << '\n';
  return os.str();
}

bool accepts_lasso(const BuchiAutomaton& aut, const Lasso& rho) {
  rho.check();
  const std::size_t S = rho.stem_size(), C = rho.cycle_size();
  const std::size_t positions = S + C;

  std::vector<Valuation> restricted;
  restricted.reserve(positions);
  for (std::size_t t = 0; t < positions; ++t)
    restricted.push_back(rho.at(t).restricted_to(aut.alphabet));

  auto next_pos = [&](std::size_t t) { return t + 1 < positions ? t + 1 : S; };
  const std::size_t V = aut.state_count() * positions;
  auto vid = [&](int state, std::size_t t) {
    return static_cast<std::size_t>(state) * positions + t;
  };

  // Reachable product vertices.
  std::vector<char> reach(V, 0);
  std::vector<std::size_t> stack{vid(aut.initial, 0)};
  reach[stack[0]] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    const int state = static_cast<int>(v / positions);
    const std::size_t t = v % positions;
    for (const auto& e : aut.out[static_cast<std::size_t>(state)]) {
      if (e.label != restricted[t]) continue;
      std::size_t w = vid(e.target, next_pos(t));
      if (!reach[w]) {
        reach[w] = 1;
        stack.push_back(w);
      }
    }
  }

  // A reachable accepting product vertex lying on a cycle decides acceptance.
  // Cycles only close in the periodic part, so look for a path from each
  // reachable accepting vertex back to itself.
  std::vector<char> mark(V, 0);
  std::vector<std::size_t> order;
  for (std::size_t v0 = 0; v0 < V; ++v0) {
    const int state0 = static_cast<int>(v0 / positions);
    if (!reach[v0] || !aut.accepting[static_cast<std::size_t>(state0)]) continue;
    std::fill(mark.begin(), mark.end(), 0);
    order.assign(1, v0);
    while (!order.empty()) {
      std::size_t v = order.back();
      order.pop_back();
      const int state = static_cast<int>(v / positions);
      const std::size_t t = v % positions;
      for (const auto& e : aut.out[static_cast<std::size_t>(state)]) {
        if (e.label != restricted[t]) continue;
        std::size_t w = vid(e.target, next_pos(t));
        if (w == v0) return true;
        if (!mark[w]) {
          mark[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return false;
}

}  // namespace ebg
