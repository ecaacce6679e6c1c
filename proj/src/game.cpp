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

#include "ebg/game.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ebg/checked.hpp"
#include "ebg/errors.hpp"

namespace ebg {

namespace {

bool reserved_name(const std::string& s) {
  return s == "X" || s == "U" || s == "F" || s == "G" || s == "true" || s == "false";
}

bool identifier_like(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

int EbgGame::player_index(std::string_view name) const {
  for (std::size_t i = 0; i < players_.size(); ++i)
    if (players_[i] == name) return static_cast<int>(i);
  return -1;
}

int EbgGame::owner_of(std::string_view atom) const {
  auto it = owner_.find(atom);
  return it == owner_.end() ? -1 : it->second;
}

std::int64_t EbgGame::cost(std::string_view atom, bool value) const {
  auto it = cost_.find({std::string(atom), value});
  if (it == cost_.end()) throw Error("no cost entry for atom '" + std::string(atom) + "'");
  return it->second;
}

EbgGame EbgGame::with_endowments(std::vector<std::int64_t> endowments) const {
  if (endowments.size() != players_.size())
    throw ValidationError("endowment vector size does not match player count");
  for (std::int64_t e : endowments)
    if (e < 0) throw ValidationError("endowments must be nonnegative");
  EbgGame g = *this;
  g.endowments_ = std::move(endowments);
  return g;
}

bool EbgGame::operator==(const EbgGame& other) const {
  return players_ == other.players_ && owned_atoms_ == other.owned_atoms_ &&
         objectives_ == other.objectives_ && endowments_ == other.endowments_ &&
         cost_ == other.cost_;
}

EbgGame validate_game(const RawGame& raw) {
  if (raw.players.empty()) throw ValidationError("a game needs at least one player");

  EbgGame g;
  std::set<std::string> player_names;
  for (const auto& p : raw.players) {
    if (!identifier_like(p.name) || reserved_name(p.name))
      throw ValidationError("invalid player name '" + p.name + "'");
    if (!player_names.insert(p.name).second)
      throw ValidationError("player '" + p.name + "' declared twice");
    g.players_.push_back(p.name);
  }

  g.owned_atoms_.resize(raw.players.size());
  for (std::size_t i = 0; i < raw.players.size(); ++i) {
    for (const auto& a : raw.players[i].atoms) {
      if (!identifier_like(a) || reserved_name(a))
        throw ValidationError("invalid atom name '" + a + "'");
      auto [it, fresh] = g.owner_.emplace(a, static_cast<int>(i));
      if (!fresh)
        throw ValidationError("atom '" + a + "' owned by both '" +
                              g.players_[static_cast<std::size_t>(it->second)] + "' and '" +
                              g.players_[i] + "'");
      g.owned_atoms_[i].push_back(a);
      g.all_atoms_.push_back(a);
    }
    std::sort(g.owned_atoms_[i].begin(), g.owned_atoms_[i].end());
  }
  std::sort(g.all_atoms_.begin(), g.all_atoms_.end());

  // Cost table: total over declared atoms, nothing else.
  for (const auto& [key, value] : raw.cost) {
    (void)value;
    if (!g.owner_.count(key.first))
      throw ValidationError("cost entry for undeclared atom '" + key.first + "'");
  }
  for (const auto& a : g.all_atoms_)
    for (bool b : {false, true})
      if (!raw.cost.count({a, b}))
        throw ValidationError("missing cost entry for atom '" + a + "' value " +
                              (b ? "true" : "false"));
  g.cost_ = raw.cost;

  std::set<std::string> atom_set(g.all_atoms_.begin(), g.all_atoms_.end());
  for (std::size_t i = 0; i < raw.players.size(); ++i) {
    const auto& p = raw.players[i];
    if (!p.has_endowment)
      throw ValidationError("player '" + p.name + "' has no endowment");
    if (p.endowment < 0)
      throw ValidationError("player '" + p.name + "' has a negative endowment");
    g.endowments_.push_back(p.endowment);
    if (!p.has_objective)
      throw ValidationError("player '" + p.name + "' has no objective");
    g.objectives_.push_back(parse_ltl(p.objective_text, atom_set));
  }
  return g;
}

std::int64_t valuation_cost(const EbgGame& g, const Valuation& v) {
  std::int64_t total = 0;
  for (const auto& a : v.atoms()) total = checked_add(total, g.cost(a, v.value(a)));
  return total;
}

}  // namespace ebg
