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
#include "ebg/io.hpp"
#include "ebg/strategy.hpp"
#include "generators.hpp"

using namespace ebg;

namespace {

const char* kTwoPlayerGame = R"(
player left
player right
atoms left: a
atoms right: b
endow left 0
endow right 0
objective left: G a
objective right: F b
cost a false 0
cost a true 1
cost b false 0
cost b true 1
)";

EbgGame two_player() { return parse_game_text(kTwoPlayerGame); }

StrategyMachine parse_for(const EbgGame& g, int player, const std::string& text) {
  return parse_strategy(text, g, player);
}

}  // namespace

TEST_SUITE("strategy") {
  TEST_CASE("parses a machine and plays it deterministically") {
    const EbgGame g = two_player();
    const StrategyMachine m = parse_for(g, 0,
                                        "init s0\n"
                                        "state s0 choose a=false\n"
                                        "state s1 choose a=true\n"
                                        "from s0 on b goto s1\n"
                                        "from s0 on * goto s0\n"
                                        "from s1 on * goto s1\n");
    CHECK(m.owner() == 0);
    CHECK(m.state_count() == 2);
    CHECK(m.initial() == 0);
    CHECK(m.state_name(1) == "s1");
    CHECK(m.choice(0).value("a") == false);
    CHECK(m.choice(1).value("a") == true);

    Valuation with_b({"a", "b"});
    with_b.set("b", true);
    Valuation without_b({"a", "b"});
    CHECK(m.update(0, with_b) == 1);
    CHECK(m.update(0, without_b) == 0);
    CHECK(m.update(1, without_b) == 1);
  }

  TEST_CASE("first matching guard fires") {
    const EbgGame g = two_player();
    const StrategyMachine m = parse_for(g, 1,
                                        "init u\n"
                                        "state u choose b=false\n"
                                        "state v choose b=true\n"
                                        "from u on a | b goto v\n"
                                        "from u on a goto u\n"
                                        "from u on * goto u\n"
                                        "from v on * goto v\n");
    Valuation a_only({"a", "b"});
    a_only.set("a", true);
    CHECK(m.update(0, a_only) == 1);  // the earlier a|b rule wins over the a rule
  }

  TEST_CASE("strategy text errors are reported") {
    const EbgGame g = two_player();
    // Unknown state in a transition.
    CHECK_THROWS_AS(parse_for(g, 0,
                              "init s0\n"
                              "state s0 choose a=false\n"
                              "from s0 on * goto ghost\n"),
                    ParseError);
    // Choice must cover exactly the owner's atoms.
    CHECK_THROWS_AS(parse_for(g, 0,
                              "init s0\n"
                              "state s0 choose b=true\n"
                              "from s0 on * goto s0\n"),
                    Error);
    // Guards must be propositional.
    CHECK_THROWS_AS(parse_for(g, 0,
                              "init s0\n"
                              "state s0 choose a=false\n"
                              "from s0 on F b goto s0\n"
                              "from s0 on * goto s0\n"),
                    Error);
    // Missing catch-all leaves the guard list non-exhaustive.
    CHECK_THROWS_AS(parse_for(g, 0,
                              "init s0\n"
                              "state s0 choose a=false\n"
                              "from s0 on b goto s0\n"),
                    ValidationError);
    // Missing init line.
    CHECK_THROWS_AS(parse_for(g, 0,
                              "state s0 choose a=false\n"
                              "from s0 on * goto s0\n"),
                    ParseError);
  }

  TEST_CASE("complete guard coverage counts as exhaustive without a catch-all") {
    const EbgGame g = two_player();
    const StrategyMachine m = parse_for(g, 0,
                                        "init s0\n"
                                        "state s0 choose a=false\n"
                                        "from s0 on b goto s0\n"
                                        "from s0 on !b goto s0\n");
    CHECK(m.state_count() == 1);
  }

  TEST_CASE("check_profile wants one machine per player in order") {
    const EbgGame g = two_player();
    const StrategyMachine m0 = parse_for(g, 0,
                                         "init s\nstate s choose a=false\nfrom s on * goto s\n");
    const StrategyMachine m1 = parse_for(g, 1,
                                         "init s\nstate s choose b=false\nfrom s on * goto s\n");
    CHECK_NOTHROW(check_profile(g, {m0, m1}));
    CHECK_THROWS_AS(check_profile(g, {m0}), ValidationError);
    CHECK_THROWS_AS(check_profile(g, {m1, m0}), ValidationError);
  }

  TEST_CASE("joint_choice merges every player's pick") {
    const EbgGame g = two_player();
    const StrategyMachine m0 = parse_for(g, 0,
                                         "init s\nstate s choose a=true\nfrom s on * goto s\n");
    const StrategyMachine m1 = parse_for(g, 1,
                                         "init s\nstate s choose b=false\nfrom s on * goto s\n");
    const Valuation v = joint_choice(g, {m0, m1}, {0, 0});
    CHECK(v.value("a") == true);
    CHECK(v.value("b") == false);
  }

  TEST_CASE("induced lasso finds the joint period") {
    const EbgGame g = two_player();
    // left cycles through 3 states, right through 2: joint period 6.
    const StrategyMachine m0 = parse_for(g, 0,
                                         "init x0\n"
                                         "state x0 choose a=false\n"
                                         "state x1 choose a=false\n"
                                         "state x2 choose a=true\n"
                                         "from x0 on * goto x1\n"
                                         "from x1 on * goto x2\n"
                                         "from x2 on * goto x0\n");
    const StrategyMachine m1 = parse_for(g, 1,
                                         "init y0\n"
                                         "state y0 choose b=false\n"
                                         "state y1 choose b=true\n"
                                         "from y0 on * goto y1\n"
                                         "from y1 on * goto y0\n");
    const InducedPlay play = induced_lasso(g, {m0, m1});
    CHECK(play.lasso.stem_size() == 0);
    CHECK(play.lasso.cycle_size() == 6);
    // Memory tuples wrap around exactly.
    REQUIRE(play.memory_tuples.size() == 7);
    CHECK(play.memory_tuples.front() == play.memory_tuples.back());
    // The emitted valuations follow both machines.
    CHECK(play.lasso.at(0).value("a") == false);
    CHECK(play.lasso.at(2).value("a") == true);
    CHECK(play.lasso.at(0).value("b") == false);
    CHECK(play.lasso.at(1).value("b") == true);
  }

  TEST_CASE("induced lasso can have a stem when early memories never recur") {
    const EbgGame g = two_player();
    const StrategyMachine m0 = parse_for(g, 0,
                                         "init burn\n"
                                         "state burn choose a=true\n"
                                         "state rest choose a=false\n"
                                         "from burn on * goto rest\n"
                                         "from rest on * goto rest\n");
    const StrategyMachine m1 = parse_for(g, 1,
                                         "init s\nstate s choose b=false\nfrom s on * goto s\n");
    const InducedPlay play = induced_lasso(g, {m0, m1});
    CHECK(play.lasso.stem_size() == 1);
    CHECK(play.lasso.cycle_size() == 1);
    CHECK(play.lasso.at(0).value("a") == true);
    CHECK(play.lasso.at(1).value("a") == false);
  }

  TEST_CASE("endowment traces follow the cost table") {
    const EbgGame g = parse_game_text(
        "player solo\n"
        "atoms solo: p\n"
        "endow solo 2\n"
        "objective solo: G p\n"
        "cost p false -1\n"
        "cost p true 3\n");
    const StrategyMachine m = parse_for(g, 0,
                                        "init on\n"
                                        "state on choose p=true\n"
                                        "state off choose p=false\n"
                                        "from on on * goto off\n"
                                        "from off on * goto on\n");
    // E: 2, then -3, then +1, alternating.
    CHECK(endowment_trace(g, {m}, 0, 5) ==
          std::vector<std::int64_t>{2, -1, 0, -3, -2, -5});
  }

  TEST_CASE("machines generated at random replay consistently") {
    ebgtest::Rng rng(5150);
    for (int i = 0; i < 100; ++i) {
      const EbgGame g = ebgtest::random_game(rng, 2, 3);
      const Profile profile = ebgtest::random_profile(rng, g, 3);
      const InducedPlay play = induced_lasso(g, profile);
      REQUIRE(play.lasso.cycle_size() >= 1);
      REQUIRE(play.memory_tuples.size() ==
              play.lasso.stem_size() + play.lasso.cycle_size() + 1);
      CHECK(play.memory_tuples[play.lasso.stem_size()] == play.memory_tuples.back());
      // Replaying the updates from the start reproduces the recorded tuples.
      std::vector<int> mem;
      for (const auto& m : profile) mem.push_back(m.initial());
      for (std::size_t t = 0; t < play.lasso.stem_size() + play.lasso.cycle_size(); ++t) {
        REQUIRE(play.memory_tuples[t] == mem);
        const Valuation full = joint_choice(g, profile, mem);
        REQUIRE(full == play.lasso.at(t));
        for (std::size_t p = 0; p < profile.size(); ++p)
          mem[p] = profile[p].update(static_cast<std::size_t>(mem[p]), full);
      }
    }
  }
}
