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

#include "ebg/strategy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ebg/checked.hpp"
#include "ebg/errors.hpp"

namespace ebg {

StrategyMachine::StrategyMachine(int owner, std::vector<std::string> state_names, int initial,
                                 std::vector<Valuation> choices,
                                 std::vector<std::vector<GuardedUpdate>> updates,
                                 const EbgGame& g)
    : owner_(owner),
      state_names_(std::move(state_names)),
      initial_(initial),
      choices_(std::move(choices)),
      updates_(std::move(updates)) {
  if (owner_ < 0 || static_cast<std::size_t>(owner_) >= g.player_count())
    throw ValidationError("strategy owner out of range");
  const std::size_t n = state_names_.size();
  if (n == 0) throw ValidationError("a strategy machine needs at least one memory state");
  if (choices_.size() != n || updates_.size() != n)
    throw ValidationError("choices/updates must cover every memory state");
  if (initial_ < 0 || static_cast<std::size_t>(initial_) >= n)
    throw ValidationError("initial memory state out of range");

  const auto& own = g.atoms_of_player(static_cast<std::size_t>(owner_));
  for (std::size_t m = 0; m < n; ++m) {
    if (choices_[m].atoms() != own)
      throw ValidationError("state '" + state_names_[m] +
                            "' must choose exactly the owner's atoms");
    bool has_catch_all = false;
    for (const auto& u : updates_[m]) {
      if (u.target < 0 || static_cast<std::size_t>(u.target) >= n)
        throw ValidationError("update target out of range in state '" + state_names_[m] + "'");
      if (!u.guard) {
        has_catch_all = true;
      } else {
        if (!u.guard->is_propositional())
          throw ValidationError("temporal operator in a guard of state '" + state_names_[m] +
                                "'");
        for (const auto& a : atoms_of(*u.guard))
          if (g.owner_of(a) < 0)
            throw ValidationError("guard in state '" + state_names_[m] +
                                  "' uses unknown atom '" + a + "'");
      }
    }
    if (!has_catch_all) {
      // Without a catch-all the guard list must cover all of T^A; that is
      // only checkable by enumeration, which we bound at 16 atoms.
      if (g.atoms().size() > 16)
        throw ValidationError("state '" + state_names_[m] +
                              "' needs a '*' catch-all (too many atoms to check coverage)");
      for (const auto& v : enumerate_valuations(g.atoms())) {
        bool covered = false;
        for (const auto& u : updates_[m])
          if (!u.guard || eval_propositional(*u.guard, v)) {
            covered = true;
            break;
          }
        if (!covered)
          throw ValidationError("guards of state '" + state_names_[m] +
                                "' do not cover valuation " + v.to_string());
      }
    }
  }
}

int StrategyMachine::update(std::size_t m, const Valuation& full) const {
  for (const auto& u : updates_.at(m))
    if (!u.guard || eval_propositional(*u.guard, full)) return u.target;
  throw Error("no guard matched in state '" + state_names_.at(m) +
              "' (exhaustiveness was validated; valuation outside the atom domain?)");
}

// ---------------------------------------------------------------------------
// Text format.

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool parse_bool_word(const std::string& w, bool& out) {
  if (w == "true") { out = true; return true; }
  if (w == "false") { out = false; return true; }
  return false;
}

}  // namespace

StrategyMachine parse_strategy(std::string_view text, const EbgGame& g, int player) {
  if (player < 0 || static_cast<std::size_t>(player) >= g.player_count())
    throw ValidationError("strategy player index out of range");

  struct PendingState {
    std::optional<Valuation> choice;
    std::vector<std::pair<std::optional<std::string>, std::string>> edges;  // guard text, target
    std::size_t first_line = 0;
  };
  std::map<std::string, PendingState> states;
  std::vector<std::string> order;  // declaration order of state names
  std::optional<std::string> init_name;

  auto touch = [&](const std::string& name, std::size_t line) -> PendingState& {
    auto [it, fresh] = states.try_emplace(name);
    if (fresh) {
      it->second.first_line = line;
      order.push_back(name);
    }
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string payload = line.substr(0, line.find('#'));
    auto words = split_ws(payload);
    if (words.empty()) continue;

    if (words[0] == "init") {
      if (words.size() != 2) throw ParseError("expected 'init <state>'", lineno, 1);
      if (init_name) throw ParseError("duplicate 'init' line", lineno, 1);
      init_name = words[1];
      touch(words[1], lineno);
    } else if (words[0] == "state") {
      // state <name> choose a=true, b=false   (assignments optional when the
      // player owns no atoms)
      if (words.size() < 3 || words[2] != "choose")
        throw ParseError("expected 'state <name> choose ...'", lineno, 1);
      PendingState& st = touch(words[1], lineno);
      if (st.choice) throw ParseError("state '" + words[1] + "' declared twice", lineno, 1);
      Valuation choice{g.atoms_of_player(static_cast<std::size_t>(player))};
      std::set<std::string> seen;
      std::string rest;
      for (std::size_t k = 3; k < words.size(); ++k) rest += words[k];
      if (!rest.empty()) {
        std::istringstream items(rest);
        std::string item;
        while (std::getline(items, item, ',')) {
          auto eq = item.find('=');
          if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
            throw ParseError("expected '<atom>=<true|false>' in choose list", lineno, 1);
          std::string atom = item.substr(0, eq);
          bool value = false;
          if (!parse_bool_word(item.substr(eq + 1), value))
            throw ParseError("expected true or false after '" + atom + "='", lineno, 1);
          if (g.owner_of(atom) != player)
            throw ParseError("atom '" + atom + "' is not owned by player '" +
                                 g.player_name(static_cast<std::size_t>(player)) + "'",
                             lineno, 1);
          if (!seen.insert(atom).second)
            throw ParseError("atom '" + atom + "' assigned twice", lineno, 1);
          choice.set(atom, value);
        }
      }
      if (seen.size() != g.atoms_of_player(static_cast<std::size_t>(player)).size())
        throw ParseError("choose list must assign every atom of player '" +
                             g.player_name(static_cast<std::size_t>(player)) + "'",
                         lineno, 1);
      st.choice = std::move(choice);
    } else if (words[0] == "from") {
      // from <state> on <guard|*> goto <state>
      if (words.size() < 5 || words[2] != "on" || words[words.size() - 2] != "goto")
        throw ParseError("expected 'from <state> on <guard|*> goto <state>'", lineno, 1);
      std::string guard_text;
      for (std::size_t k = 3; k + 2 < words.size(); ++k) {
        if (k > 3) guard_text += ' ';
        guard_text += words[k];
      }
      PendingState& st = touch(words[1], lineno);
      const std::string& target = words.back();
      touch(target, lineno);
      if (guard_text == "*")
        st.edges.emplace_back(std::nullopt, target);
      else
        st.edges.emplace_back(guard_text, target);
    } else {
      throw ParseError("unknown directive '" + words[0] + "'", lineno, 1);
    }
  }

  if (!init_name) throw ParseError("missing 'init' line", lineno ? lineno : 1, 1);
  if (order.empty()) throw ParseError("strategy defines no memory states", 1, 1);

  std::map<std::string, int> index;
  for (std::size_t m = 0; m < order.size(); ++m) index[order[m]] = static_cast<int>(m);

  std::set<std::string> atom_set(g.atoms().begin(), g.atoms().end());
  std::vector<Valuation> choices;
  std::vector<std::vector<GuardedUpdate>> updates;
  for (const auto& name : order) {
    const PendingState& st = states.at(name);
    if (!st.choice)
      throw ParseError("state '" + name + "' has no 'state ... choose' line", st.first_line, 1);
    choices.push_back(*st.choice);
    std::vector<GuardedUpdate> outs;
    for (const auto& [guard_text, target] : st.edges) {
      GuardedUpdate u;
      u.target = index.at(target);
      if (guard_text) u.guard = parse_ltl(*guard_text, atom_set);
      outs.push_back(std::move(u));
    }
    if (outs.empty())
      throw ParseError("state '" + name + "' has no 'from' transitions", st.first_line, 1);
    updates.push_back(std::move(outs));
  }

  return StrategyMachine(player, order, index.at(*init_name), std::move(choices),
                         std::move(updates), g);
}

// ---------------------------------------------------------------------------
// Simulation.

Valuation joint_choice(const EbgGame& g, const Profile& profile, const std::vector<int>& mem) {
  Valuation full{g.atoms()};
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const Valuation& c = profile[i].choice(static_cast<std::size_t>(mem[i]));
    for (const auto& a : c.atoms()) full.set(a, c.value(a));
  }
  return full;
}

void check_profile(const EbgGame& g, const Profile& profile) {
  if (profile.size() != g.player_count())
    throw ValidationError("profile must contain one machine per player");
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (profile[i].owner() != static_cast<int>(i))
      throw ValidationError("profile machine " + std::to_string(i) +
                            " belongs to another player");
}

InducedPlay induced_lasso(const EbgGame& g, const Profile& profile) {
  check_profile(g, profile);
  const std::size_t n = profile.size();

  std::vector<int> mem(n);
  for (std::size_t i = 0; i < n; ++i) mem[i] = profile[i].initial();

  std::map<std::vector<int>, std::size_t> first_seen;
  std::vector<std::vector<int>> tuples;
  std::vector<Valuation> emitted;
  for (;;) {
    auto [it, fresh] = first_seen.try_emplace(mem, tuples.size());
    tuples.push_back(mem);
    if (!fresh) {
      const std::size_t entry = it->second;
      InducedPlay play;
      play.lasso.stem.assign(emitted.begin(), emitted.begin() + static_cast<long>(entry));
      play.lasso.cycle.assign(emitted.begin() + static_cast<long>(entry), emitted.end());
      play.memory_tuples = std::move(tuples);
      play.lasso.check();
      return play;
    }
    Valuation full = joint_choice(g, profile, mem);
    for (std::size_t i = 0; i < n; ++i)
      mem[i] = profile[i].update(static_cast<std::size_t>(mem[i]), full);
    emitted.push_back(std::move(full));
  }
}

std::vector<std::int64_t> endowment_trace(const EbgGame& g, const Profile& profile, int player,
                                          std::size_t horizon) {
  check_profile(g, profile);
  if (player < 0 || static_cast<std::size_t>(player) >= g.player_count())
    throw ValidationError("player index out of range");

  std::vector<int> mem(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) mem[i] = profile[i].initial();

  std::vector<std::int64_t> trace;
  trace.reserve(horizon + 1);
  std::int64_t energy = g.endowment(static_cast<std::size_t>(player));
  trace.push_back(energy);
  for (std::size_t t = 0; t < horizon; ++t) {
    const Valuation& own = profile[static_cast<std::size_t>(player)].choice(
        static_cast<std::size_t>(mem[static_cast<std::size_t>(player)]));
    energy = checked_sub(energy, valuation_cost(g, own));
    trace.push_back(energy);
    Valuation full = joint_choice(g, profile, mem);
    for (std::size_t i = 0; i < profile.size(); ++i)
      mem[i] = profile[i].update(static_cast<std::size_t>(mem[i]), full);
  }
  return trace;
}

}  // namespace ebg
