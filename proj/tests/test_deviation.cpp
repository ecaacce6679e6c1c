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
#include "ebg/deviation.hpp"
#include "ebg/equilibrium.hpp"
#include "ebg/errors.hpp"
#include "ebg/feasibility.hpp"
#include "ebg/io.hpp"
#include "generators.hpp"

using namespace ebg;

namespace {

EbgGame copier_game(const std::string& setter_objective) {
  return parse_game_text(
      "player copier\n"
      "player setter\n"
      "atoms copier: p\n"
      "atoms setter: q\n"
      "endow copier 0\n"
      "endow setter 0\n"
      "objective copier: G ((q -> X p) & (!q -> X !p))\n"
      "objective setter: " +
      setter_objective +
      "\n"
      "cost p false -1\n"
      "cost p true 1\n"
      "cost q false 0\n"
      "cost q true 0\n");
}

Profile copier_profile(const EbgGame& g) {
  return {parse_strategy("init low\n"
                         "state low choose p=false\n"
                         "state high choose p=true\n"
                         "from low on q goto high\n"
                         "from low on * goto low\n"
                         "from high on q goto high\n"
                         "from high on * goto low\n",
                         g, 0),
          parse_strategy("init off\nstate off choose q=false\nfrom off on * goto off\n", g, 1)};
}

// Swaps one player's machine and reports whether the deviation is rational:
// the new profile stays feasible and the deviator's objective holds.
bool deviation_is_rational(const EbgGame& g, Profile profile, const StrategyMachine& machine) {
  const int player = machine.owner();
  profile[static_cast<std::size_t>(player)] = machine;
  if (!is_feasible(g, profile).feasible) return false;
  return eval_lasso(g.objective(static_cast<std::size_t>(player)),
                    induced_lasso(g, profile).lasso);
}

}  // namespace

TEST_SUITE("deviation") {
  TEST_CASE("an objective that forces another player's ruin is not deviable-to") {
    // Satisfying G q makes the copier echo q forever, which bankrupts it, so
    // no deviation of the setter is rational.
    const EbgGame g = copier_game("G q");
    const DeviationResult res = has_rational_deviation(g, copier_profile(g), 1);
    CHECK(res.verdict == Verdict::No);
    CHECK_FALSE(res.deviation.has_value());
  }

  TEST_CASE("a one-shot objective is deviable-to and the witness replays") {
    const EbgGame g = copier_game("F q");
    const Profile profile = copier_profile(g);
    const DeviationResult res = has_rational_deviation(g, profile, 1);
    REQUIRE(res.verdict == Verdict::Yes);
    REQUIRE(res.deviation.has_value());
    const RationalDeviation& dev = *res.deviation;
    CHECK(dev.deviator == 1);
    CHECK(dev.machine.owner() == 1);
    CHECK(dev.segment_letters.size() >= 1);

    CHECK(deviation_is_rational(g, profile, dev.machine));

    // The synthesized machine survives a serialization round trip.
    const std::string text = serialize_strategy(g, dev.machine);
    const StrategyMachine reparsed = parse_strategy(text, g, 1);
    CHECK(serialize_strategy(g, reparsed) == text);
    CHECK(deviation_is_rational(g, profile, reparsed));
  }

  TEST_CASE("an unaffordable objective yields no deviation") {
    // The deviator would need a=true forever at one unit per round.
    const EbgGame g = parse_game_text(
        "player poor\n"
        "player rich\n"
        "atoms poor: a\n"
        "atoms rich: b\n"
        "endow poor 0\n"
        "endow rich 5\n"
        "objective poor: G a\n"
        "objective rich: b -> b\n"
        "cost a false 0\n"
        "cost a true 1\n"
        "cost b false 0\n"
        "cost b true 0\n");
    const Profile profile{
        parse_strategy("init s\nstate s choose a=false\nfrom s on * goto s\n", g, 0),
        parse_strategy("init s\nstate s choose b=false\nfrom s on * goto s\n", g, 1)};
    CHECK(has_rational_deviation(g, profile, 0).verdict == Verdict::No);
  }

  TEST_CASE("an affordable objective is found and paid for") {
    // Same shape, but idling earns the deviator one unit per round, so it
    // can afford a=true half the time; F a needs it only once.
    const EbgGame g = parse_game_text(
        "player poor\n"
        "player rich\n"
        "atoms poor: a\n"
        "atoms rich: b\n"
        "endow poor 0\n"
        "endow rich 5\n"
        "objective poor: F a\n"
        "objective rich: b -> b\n"
        "cost a false -1\n"
        "cost a true 2\n"
        "cost b false 0\n"
        "cost b true 0\n");
    const Profile profile{
        parse_strategy("init s\nstate s choose a=false\nfrom s on * goto s\n", g, 0),
        parse_strategy("init s\nstate s choose b=false\nfrom s on * goto s\n", g, 1)};
    const DeviationResult res = has_rational_deviation(g, profile, 0);
    REQUIRE(res.verdict == Verdict::Yes);
    CHECK(deviation_is_rational(g, profile, res.deviation->machine));
  }

  TEST_CASE("preconditions are enforced") {
    const EbgGame g = copier_game("F q");
    const Profile profile = copier_profile(g);

    // Deviator index out of range.
    CHECK_THROWS_AS(has_rational_deviation(g, profile, 7), ValidationError);

    // The copier already attains payoff 1.
    CHECK_THROWS_AS(has_rational_deviation(g, profile, 0), ValidationError);

    // Infeasible profiles are rejected outright.
    const Profile bad{profile[0],
                      parse_strategy("init on\nstate on choose q=true\nfrom on on * goto on\n",
                                     g, 1)};
    CHECK_THROWS_AS(has_rational_deviation(g, bad, 1), ValidationError);
  }

  TEST_CASE("a tiny node budget reports unknown") {
    const EbgGame g = copier_game("F q");
    const DeviationResult res =
        has_rational_deviation(g, copier_profile(g), 1, /*node_budget=*/2);
    CHECK(res.verdict == Verdict::Unknown);
    CHECK_FALSE(res.deviation.has_value());
  }

  TEST_CASE("the deviation game hides the deviator's memory") {
    const EbgGame g = copier_game("F q");
    const Profile profile = copier_profile(g);
    DeviationGame dg(g, profile, 1);
    CHECK(dg.dimension() == 2);
    CHECK(dg.initial_vertex() == 0);
    const auto& mem = dg.memories(0);
    REQUIRE(mem.size() == 2);
    CHECK(mem[0] == 0);   // copier's machine starts in its initial state
    CHECK(mem[1] == -1);  // the deviator's slot is unconstrained
    CHECK(dg.successors(0).size() >= 1);
  }

  TEST_CASE("found deviations replay on random games") {
    ebgtest::Rng rng(8675309);
    int yes_count = 0;
    int candidates = 0;
    for (int i = 0; i < 150 && candidates < 60; ++i) {
      const EbgGame g = ebgtest::random_game(rng, 2, 2);
      const Profile profile = ebgtest::random_profile(rng, g, 2);
      if (!is_feasible(g, profile).feasible) continue;
      for (int player = 0; player < 2; ++player) {
        if (eval_lasso(g.objective(static_cast<std::size_t>(player)),
                       induced_lasso(g, profile).lasso))
          continue;
        ++candidates;
        const DeviationResult res = has_rational_deviation(g, profile, player);
        REQUIRE(res.verdict != Verdict::Unknown);
        if (res.verdict == Verdict::Yes) {
          ++yes_count;
          REQUIRE(deviation_is_rational(g, profile, res.deviation->machine));
        } else {
          // Refutation sampling: no random machine may beat the solver.
          for (int k = 0; k < 20; ++k) {
            const StrategyMachine tau = ebgtest::random_machine(rng, g, player, 3);
            REQUIRE_FALSE(deviation_is_rational(g, profile, tau));
          }
        }
      }
    }
    CHECK(candidates >= 20);
    CHECK(yes_count >= 5);
  }
}
