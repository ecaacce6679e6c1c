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
#include <map>
#include <string>
#include <vector>

#include "ebg/ltl.hpp"
#include "ebg/valuation.hpp"

namespace ebg {

// Unvalidated game description, the direct image of a game file: players with
// their atoms, objectives and endowments, plus the cost table.  Construction
// of a usable game goes through validate_game().
struct RawGame {
  struct Player {
    std::string name;
    std::vector<std::string> atoms;       // may be empty
    std::string objective_text;           // LTL over all declared atoms
    std::int64_t endowment = 0;
    bool has_objective = false;
    bool has_endowment = false;
  };
  std::vector<Player> players;
  // (atom, value) -> cost; must be total over declared atoms x {false,true}.
  std::map<std::pair<std::string, bool>, std::int64_t> cost;
};

// A validated game: n players partitioning the atom set, one LTL objective
// and one nonnegative endowment each, and a total cost table.  Immutable
// after validation; all operations on it are safely concurrent.
class EbgGame {
 public:
  std::size_t player_count() const { return players_.size(); }
  const std::vector<std::string>& player_names() const { return players_; }
  const std::string& player_name(std::size_t i) const { return players_.at(i); }
  int player_index(std::string_view name) const;  // -1 if unknown

  // Atoms owned by player i, sorted.
  const std::vector<std::string>& atoms_of_player(std::size_t i) const {
    return owned_atoms_.at(i);
  }
  // All atoms, sorted.
  const std::vector<std::string>& atoms() const { return all_atoms_; }
  int owner_of(std::string_view atom) const;  // -1 if unknown

  const LtlFormula& objective(std::size_t i) const { return objectives_.at(i); }
  std::int64_t endowment(std::size_t i) const { return endowments_.at(i); }
  const std::vector<std::int64_t>& endowments() const { return endowments_; }

  std::int64_t cost(std::string_view atom, bool value) const;

  // Same game with the endowment vector replaced (redistribution support).
  EbgGame with_endowments(std::vector<std::int64_t> endowments) const;

  bool operator==(const EbgGame& other) const;

  friend EbgGame validate_game(const RawGame& raw);

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> owned_atoms_;
  std::vector<LtlFormula> objectives_;
  std::vector<std::int64_t> endowments_;
  std::vector<std::string> all_atoms_;
  std::map<std::string, int, std::less<>> owner_;
  std::map<std::pair<std::string, bool>, std::int64_t> cost_;
};

// Checks the raw description and produces the game:
//  - player names unique and nonempty, not reserved words;
//  - atoms partitioned (no atom owned twice, names not reserved);
//  - cost table total over atoms x {false,true}, no stray entries;
//  - endowments present and nonnegative;
//  - objectives present and parseable over the declared atoms.
// Throws ValidationError (or ParseError for objective syntax).
EbgGame validate_game(const RawGame& raw);

// Total cost of one round under valuation v: sum of cost(p, v(p)) over the
// atoms in v's domain.  Overflow-checked.
std::int64_t valuation_cost(const EbgGame& g, const Valuation& v);

}  // namespace ebg
