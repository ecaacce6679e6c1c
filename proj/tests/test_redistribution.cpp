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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "ebg/equilibrium.hpp"
#include "ebg/errors.hpp"
#include "ebg/io.hpp"
#include "ebg/redistribution.hpp"
#include "generators.hpp"

using namespace ebg;

namespace {

Profile load(const EbgGame& g, const std::vector<std::string>& paths) {
  Profile p;
  for (std::size_t i = 0; i < paths.size(); ++i)
    p.push_back(parse_strategy_file(paths[i], g, static_cast<int>(i)));
  return p;
}

}  // namespace

TEST_SUITE("redistribution") {
  TEST_CASE("composition counts follow the stars-and-bars formula") {
    CHECK(composition_count(0, 1) == 1);
    CHECK(composition_count(0, 4) == 1);
    CHECK(composition_count(2, 3) == 6);
    CHECK(composition_count(5, 2) == 6);
    CHECK(composition_count(10, 4) == 286);
    CHECK(composition_count(1, 7) == 7);
    CHECK(composition_count(3, 0) == 0);
    CHECK(composition_count(0, 0) == 1);
    // Values beyond 64 bits saturate instead of wrapping.
    CHECK(composition_count(1000000, 12) == std::numeric_limits<std::uint64_t>::max());
  }

  TEST_CASE("the enumerator lists compositions in ascending lexicographic order") {
    RedistributionEnumerator en(2, 3, 100);
    std::vector<std::vector<std::int64_t>> seen;
    while (auto split = en.next()) seen.push_back(*split);
    const std::vector<std::vector<std::int64_t>> expected{
        {0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
    CHECK(seen == expected);
    CHECK(en.count() == 6);
  }

  TEST_CASE("every enumerated split preserves the pot") {
    RedistributionEnumerator en(5, 4, 1000);
    std::size_t n = 0;
    while (auto split = en.next()) {
      std::int64_t sum = 0;
      for (const auto v : *split) {
        CHECK(v >= 0);
        sum += v;
      }
      CHECK(sum == 5);
      ++n;
    }
    CHECK(n == composition_count(5, 4));
  }

  TEST_CASE("the enumeration cap trips with a pointer to the shortcut") {
    try {
      RedistributionEnumerator en(1000, 6, 1000);
      FAIL("expected LimitError");
    } catch (const LimitError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("re") != std::string::npos);
    }
    CHECK_THROWS_AS(RedistributionEnumerator(1, 0, 10), ValidationError);
  }

  TEST_CASE("construction finds the split that funds the spender") {
    const EbgGame g = parse_game_file("games/pot.game");
    const Profile profile = load(g, {"games/spender.strat", "games/saver.strat"});
    const RedistributionResult res = rational_construction(g, profile);
    REQUIRE(res.verdict == Verdict::Yes);
    REQUIRE(res.endowments.has_value());
    CHECK(*res.endowments == std::vector<std::int64_t>{1, 0});
    CHECK(res.candidates_tried == 2);  // (0,1) fails, (1,0) works
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->outcome == NemOutcome::Equilibrium);

    // The certificate must hold up under an independent check.
    const EbgGame funded = g.with_endowments(*res.endowments);
    CHECK(is_nash_equilibrium(funded, profile).outcome == NemOutcome::Equilibrium);
  }

  TEST_CASE("construction reports no when every split fails") {
    // The spender burns one unit every round; no split of the one-unit pot
    // can sustain that.
    const EbgGame g = parse_game_text(
        "player spender\n"
        "player saver\n"
        "atoms spender: a\n"
        "atoms saver: b\n"
        "endow spender 0\n"
        "endow saver 1\n"
        "objective spender: a -> a\n"
        "objective saver: b -> b\n"
        "cost a false 1\n"
        "cost a true 1\n"
        "cost b false 0\n"
        "cost b true 0\n");
    const Profile profile{
        parse_strategy("init s\nstate s choose a=false\nfrom s on * goto s\n", g, 0),
        parse_strategy("init s\nstate s choose b=false\nfrom s on * goto s\n", g, 1)};
    const RedistributionResult res = rational_construction(g, profile);
    CHECK(res.verdict == Verdict::No);
    CHECK(res.candidates_tried == 2);
    CHECK_FALSE(res.endowments.has_value());
  }

  TEST_CASE("elimination finds the allocation that breaks the equilibrium") {
    const EbgGame g = parse_game_file("games/pot-re.game");
    const Profile profile = load(g, {"games/spender.strat", "games/saver.strat"});
    REQUIRE(is_nash_equilibrium(g, profile).outcome == NemOutcome::Equilibrium);

    const RedistributionResult res = rational_elimination(g, profile);
    REQUIRE(res.verdict == Verdict::Yes);
    CHECK(*res.endowments == std::vector<std::int64_t>{0, 1});
    CHECK(res.candidates_tried == 2);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->outcome == NemOutcome::NotEquilibrium);

    const EbgGame moved = g.with_endowments(*res.endowments);
    CHECK(is_nash_equilibrium(moved, profile).outcome == NemOutcome::NotEquilibrium);
  }

  TEST_CASE("elimination reports no when every allocation stays an equilibrium") {
    const EbgGame g = parse_game_file("games/provider.game");
    const Profile profile =
        load(g, {"games/client1.strat", "games/client2.strat", "games/provider.strat"});
    // The pot is empty, so every single-player allocation equals the current
    // endowments and the equilibrium persists.
    const RedistributionResult res = rational_elimination(g, profile);
    CHECK(res.verdict == Verdict::No);
    CHECK(res.candidates_tried == 3);
  }

  TEST_CASE("construction agrees with checking every split on random games") {
    ebgtest::Rng rng(60902);
    int yes = 0;
    for (int i = 0; i < 60; ++i) {
      const EbgGame g = ebgtest::random_game(rng, 2, 2);
      const Profile profile = ebgtest::random_profile(rng, g, 2);
      const RedistributionResult res = rational_construction(g, profile);
      REQUIRE(res.verdict != Verdict::Unknown);

      std::int64_t total = 0;
      for (const auto e : g.endowments()) total += e;
      bool expected = false;
      RedistributionEnumerator en(total, g.player_count(), 100000);
      while (auto split = en.next()) {
        const EbgGame h = g.with_endowments(*split);
        if (is_nash_equilibrium(h, profile).outcome == NemOutcome::Equilibrium) {
          expected = true;
          break;
        }
      }
      REQUIRE((res.verdict == Verdict::Yes) == expected);
      if (res.verdict == Verdict::Yes) {
        ++yes;
        const EbgGame h = g.with_endowments(*res.endowments);
        REQUIRE(is_nash_equilibrium(h, profile).outcome == NemOutcome::Equilibrium);
      }
    }
    CHECK(yes > 5);
  }
}
