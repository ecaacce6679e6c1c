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
#include "generators.hpp"

using namespace ebg;

namespace {

bool has_line(const std::string& text, const std::string& line) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string current =
        text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (current == line) return true;
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return false;
}

RunRequest request(const std::string& command, const std::string& game,
                   std::vector<std::string> strategies = {}, const std::string& player = "") {
  RunRequest req;
  req.command = command;
  req.game_path = game;
  req.strategy_paths = std::move(strategies);
  req.player = player;
  return req;
}

const std::vector<std::string> kCopierProfile{"games/copier.strat", "games/setter-quiet.strat"};

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("game files round-trip through the serializer") {
    for (const char* path : {"games/provider.game", "games/copier.game", "games/pot.game"}) {
      CAPTURE(path);
      const EbgGame g = parse_game_file(path);
      const EbgGame h = parse_game_text(serialize_game(g));
      CHECK(g == h);
      CHECK(serialize_game(g) == serialize_game(h));
    }
  }

  TEST_CASE("random games round-trip through the serializer") {
    ebgtest::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
      const EbgGame g = ebgtest::random_game(rng, ebgtest::pick(rng, 2, 3), 3);
      CHECK(parse_game_text(serialize_game(g)) == g);
    }
  }

  TEST_CASE("strategy files round-trip through the serializer") {
    const EbgGame g = parse_game_file("games/copier.game");
    const StrategyMachine m = parse_strategy_file("games/copier.strat", g, 0);
    const std::string text = serialize_strategy(g, m);
    const StrategyMachine n = parse_strategy(text, g, 0);
    CHECK(serialize_strategy(g, n) == text);
  }

  TEST_CASE("game parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
      try {
        parse_game_text(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("player a\nbogus directive\n") == 2);
    CHECK(line_of("atoms ghost: x\n") == 1);          // player not declared
    CHECK(line_of("player a\nplayer a\n") == 2);      // duplicate player
    CHECK(line_of("player a\nendow a 1\nendow a 2\n") == 3);
    CHECK(line_of("player a\nendow a x\n") == 2);     // not an integer
    CHECK(line_of("player a\ncost p maybe 3\n") == 2);
    CHECK(line_of("player a\nobjective a\n") == 2);   // missing colon
  }

  TEST_CASE("comments and blank lines are ignored") {
    const EbgGame g = parse_game_text(
        "# header comment\n"
        "player solo   # trailing comment\n"
        "\n"
        "atoms solo: p\n"
        "endow solo 0\n"
        "objective solo: G p   # the objective\n"
        "cost p false 0\n"
        "cost p true 0\n");
    CHECK(g.player_count() == 1);
    CHECK(g.objective(0).to_string() == "G p");
  }

  TEST_CASE("file errors name the offending path") {
    try {
      parse_game_file("games/no-such-file.game");
      FAIL("expected Error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("no-such-file") != std::string::npos);
    }
  }

  TEST_CASE("run validate") {
    const RunReport ok = run(request("validate", "games/copier.game"));
    CHECK(ok.exit_code == 0);
    CHECK(has_line(ok.text, "verdict=valid"));
    CHECK(has_line(ok.text, "players=2"));

    const RunReport with_strats = run(request("validate", "games/copier.game", kCopierProfile));
    CHECK(with_strats.exit_code == 0);
    CHECK(has_line(with_strats.text, "strategies=2"));

    const RunReport bad = run(request("validate", "games/no-such-file.game"));
    CHECK(bad.exit_code == 3);
    CHECK(has_line(bad.text, "verdict=error"));
  }

  TEST_CASE("run simulate emits one endowment row per player") {
    RunRequest req = request("simulate", "games/copier.game", kCopierProfile);
    req.steps = 4;
    const RunReport rep = run(req);
    CHECK(rep.exit_code == 0);
    CHECK(has_line(rep.text, "endowment.copier=0,1,2,3,4"));
    CHECK(has_line(rep.text, "endowment.setter=0,0,0,0,0"));

    req.steps = -1;
    CHECK(run(req).exit_code == 3);
  }

  TEST_CASE("run feasible in both directions") {
    const RunReport yes = run(request("feasible", "games/copier.game", kCopierProfile));
    CHECK(yes.exit_code == 0);
    CHECK(has_line(yes.text, "verdict=feasible"));
    CHECK(yes.text.find("witness.cycle=") != std::string::npos);

    const RunReport no = run(request(
        "feasible", "games/copier.game", {"games/copier.strat", "games/setter-always.strat"}));
    CHECK(no.exit_code == 1);
    CHECK(has_line(no.text, "verdict=infeasible"));
    CHECK(has_line(no.text, "violation.player=copier"));
    CHECK(has_line(no.text, "violation.step=3"));
    CHECK(has_line(no.text, "violation.value=-1"));
    CHECK(has_line(no.text, "positive_cycle.total=1"));
  }

  TEST_CASE("run payoff resolves players by name and by index") {
    RunRequest req = request("payoff", "games/copier.game", kCopierProfile, "copier");
    CHECK(run(req).exit_code == 0);
    req.player = "1";
    CHECK(run(req).exit_code == 0);
    req.player = "setter";
    const RunReport rep = run(req);
    CHECK(rep.exit_code == 1);
    CHECK(has_line(rep.text, "verdict=unsatisfied"));
    CHECK(has_line(rep.text, "payoff=0"));
    req.player = "3";
    CHECK(run(req).exit_code == 3);
    req.player = "nobody";
    CHECK(run(req).exit_code == 3);
  }

  TEST_CASE("run deviation covers found, none, and error") {
    RunRequest req = request("deviation", "games/copier-once.game", kCopierProfile, "setter");
    const RunReport found = run(req);
    CHECK(found.exit_code == 0);
    CHECK(has_line(found.text, "verdict=deviation"));
    CHECK(has_line(found.text, "deviator=setter"));
    CHECK(found.text.find("witness.stem=") != std::string::npos);
    CHECK(found.text.find("init d0") != std::string::npos);

    const RunReport none =
        run(request("deviation", "games/copier.game", kCopierProfile, "setter"));
    CHECK(none.exit_code == 1);
    CHECK(has_line(none.text, "verdict=none"));

    // A satisfied player is answered without solving.
    const RunReport satisfied =
        run(request("deviation", "games/copier.game", kCopierProfile, "copier"));
    CHECK(satisfied.exit_code == 1);
    CHECK(has_line(satisfied.text, "verdict=none"));

    // An infeasible profile is a usage error.
    const RunReport err = run(request(
        "deviation", "games/copier.game", {"games/copier.strat", "games/setter-always.strat"},
        "setter"));
    CHECK(err.exit_code == 3);
    CHECK(has_line(err.text, "verdict=error"));
  }

  TEST_CASE("run check-ne covers all three verdicts") {
    const RunReport eq = run(request("check-ne", "games/copier.game", kCopierProfile));
    CHECK(eq.exit_code == 0);
    CHECK(has_line(eq.text, "verdict=equilibrium"));
    CHECK(has_line(eq.text, "payoff.copier=1"));
    CHECK(has_line(eq.text, "payoff.setter=0"));

    const RunReport noneq = run(request("check-ne", "games/copier-once.game", kCopierProfile));
    CHECK(noneq.exit_code == 1);
    CHECK(has_line(noneq.text, "verdict=not-equilibrium"));
    CHECK(has_line(noneq.text, "deviator=setter"));

    RunRequest tiny = request("check-ne", "games/copier-once.game", kCopierProfile);
    tiny.node_budget = 2;
    const RunReport unknown = run(tiny);
    CHECK(unknown.exit_code == 2);
    CHECK(has_line(unknown.text, "verdict=unknown"));
    CHECK(has_line(unknown.text, "unknown.player=setter"));
  }

  TEST_CASE("run rc and re report splits with per-player keys") {
    const RunReport rc = run(
        request("rc", "games/pot.game", {"games/spender.strat", "games/saver.strat"}));
    CHECK(rc.exit_code == 0);
    CHECK(has_line(rc.text, "verdict=redistribution"));
    CHECK(has_line(rc.text, "redistribution=1,0"));
    CHECK(has_line(rc.text, "endowment.spender=1"));
    CHECK(has_line(rc.text, "endowment.saver=0"));
    CHECK(has_line(rc.text, "candidates=2"));

    const RunReport re = run(
        request("re", "games/pot-re.game", {"games/spender.strat", "games/saver.strat"}));
    CHECK(re.exit_code == 0);
    CHECK(has_line(re.text, "redistribution=0,1"));

    const RunReport re_no = run(request(
        "re", "games/provider.game",
        {"games/client1.strat", "games/client2.strat", "games/provider.strat"}));
    CHECK(re_no.exit_code == 1);
    CHECK(has_line(re_no.text, "verdict=none"));
  }

  TEST_CASE("run rejects unknown commands and wrong strategy counts") {
    CHECK(run(request("frobnicate", "games/copier.game")).exit_code == 3);
    CHECK(run(request("feasible", "games/copier.game", {"games/copier.strat"})).exit_code == 3);
    CHECK(run(request("payoff", "games/copier.game", kCopierProfile)).exit_code == 3);
  }

  TEST_CASE("repeated runs are byte-identical") {
    const std::vector<RunRequest> requests{
        request("check-ne", "games/copier-once.game", kCopierProfile),
        request("deviation", "games/copier-once.game", kCopierProfile, "setter"),
        request("rc", "games/pot.game", {"games/spender.strat", "games/saver.strat"}),
        request("simulate", "games/provider.game",
                {"games/client1.strat", "games/client2.strat", "games/provider.strat"}),
    };
    for (const RunRequest& req : requests) {
      const RunReport a = run(req);
      const RunReport b = run(req);
      CHECK(a.exit_code == b.exit_code);
      CHECK(a.text == b.text);
    }
  }
}
