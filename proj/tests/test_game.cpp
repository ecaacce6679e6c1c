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

#include <string>
#include <vector>

#include "doctest.h"
#include "ebg/errors.hpp"
#include "ebg/game.hpp"

using namespace ebg;

namespace {

// A well-formed two-player description to perturb.
RawGame sample_raw() {
  RawGame raw;
  raw.players.push_back({"alice", {"a"}, "G a", 1, true, true});
  raw.players.push_back({"bob", {"b"}, "F b", 0, true, true});
  raw.cost[{"a", false}] = 0;
  raw.cost[{"a", true}] = 2;
  raw.cost[{"b", false}] = -1;
  raw.cost[{"b", true}] = 1;
  return raw;
}

}  // namespace

TEST_SUITE("game") {
  TEST_CASE("a well-formed description validates") {
    const EbgGame g = validate_game(sample_raw());
    CHECK(g.player_count() == 2);
    CHECK(g.player_name(0) == "alice");
    CHECK(g.player_index("bob") == 1);
    CHECK(g.player_index("carol") == -1);
    CHECK(g.atoms() == std::vector<std::string>{"a", "b"});
    CHECK(g.atoms_of_player(0) == std::vector<std::string>{"a"});
    CHECK(g.owner_of("b") == 1);
    CHECK(g.owner_of("zzz") == -1);
    CHECK(g.endowment(0) == 1);
    CHECK(g.endowments() == std::vector<std::int64_t>{1, 0});
    CHECK(g.cost("a", true) == 2);
    CHECK(g.cost("b", false) == -1);
    CHECK(g.objective(1).to_string() == "F b");
  }

  TEST_CASE("duplicate player names are rejected") {
    RawGame raw = sample_raw();
    raw.players[1].name = "alice";
    CHECK_THROWS_AS(validate_game(raw), ValidationError);
  }

  TEST_CASE("reserved words cannot name players or atoms") {
    RawGame raw = sample_raw();
    raw.players[0].name = "true";
    CHECK_THROWS_AS(validate_game(raw), ValidationError);

    raw = sample_raw();
    raw.players[0].atoms = {"U"};
    CHECK_THROWS_AS(validate_game(raw), ValidationError);
  }

  TEST_CASE("an atom owned by two players is rejected with both owners named") {
    RawGame raw = sample_raw();
    raw.players[1].atoms.push_back("a");
    try {
      validate_game(raw);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("alice") != std::string::npos);
      CHECK(msg.find("bob") != std::string::npos);
    }
  }

  TEST_CASE("cost table must be total") {
    RawGame raw = sample_raw();
    raw.cost.erase({"b", true});
    CHECK_THROWS_AS(validate_game(raw), ValidationError);
  }

  TEST_CASE("stray cost entries are rejected") {
    RawGame raw = sample_raw();
    raw.cost[{"ghost", true}] = 1;
    CHECK_THROWS_AS(validate_game(raw), ValidationError);
  }

  TEST_CASE("endowments must be present and nonnegative") {
    RawGame raw = sample_raw();
    raw.players[0].endowment = -1;
    CHECK_THROWS_AS(validate_game(raw), ValidationError);

    raw = sample_raw();
    raw.players[0].has_endowment = false;
    CHECK_THROWS_AS(validate_game(raw), ValidationError);
  }

  TEST_CASE("objectives must be present and parse over the declared atoms") {
    RawGame raw = sample_raw();
    raw.players[1].has_objective = false;
    CHECK_THROWS_AS(validate_game(raw), ValidationError);

    raw = sample_raw();
    raw.players[1].objective_text = "F ghost";
    CHECK_THROWS_AS(validate_game(raw), ParseError);
  }

  TEST_CASE("objectives may mention other players' atoms") {
    RawGame raw = sample_raw();
    raw.players[0].objective_text = "G (a -> F b)";
    const EbgGame g = validate_game(raw);
    CHECK(g.objective(0).to_string() == "G (a -> F b)");
  }

  TEST_CASE("a player may own no atoms") {
    RawGame raw = sample_raw();
    raw.players.push_back({"watcher", {}, "F a", 0, true, true});
    const EbgGame g = validate_game(raw);
    CHECK(g.atoms_of_player(2).empty());
  }

  TEST_CASE("valuation_cost sums the chosen values' costs") {
    const EbgGame g = validate_game(sample_raw());
    Valuation v({"a", "b"});
    v.set("a", true);
    CHECK(valuation_cost(g, v) == 2 + (-1));
    v.set("b", true);
    CHECK(valuation_cost(g, v) == 2 + 1);

    Valuation only_b({"b"});
    CHECK(valuation_cost(g, only_b) == -1);
  }

  TEST_CASE("with_endowments replaces the endowment vector only") {
    const EbgGame g = validate_game(sample_raw());
    const EbgGame h = g.with_endowments({5, 7});
    CHECK(h.endowment(0) == 5);
    CHECK(h.endowment(1) == 7);
    CHECK(h.cost("a", true) == g.cost("a", true));
    CHECK_FALSE(g == h);
    CHECK(g == h.with_endowments({1, 0}));
    CHECK_THROWS_AS(g.with_endowments({1}), ValidationError);
    CHECK_THROWS_AS(g.with_endowments({-1, 0}), ValidationError);
  }
}
