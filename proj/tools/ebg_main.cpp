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

#include <cstdio>

#include "CLI11.hpp"
#include "ebg/io.hpp"

// Command-line front end.  All real work happens in ebg::run(); this file only
// maps argv onto a RunRequest and the report back onto stdout + exit code:
// 0 affirmative, 1 negative, 2 inconclusive, 3 input or usage error.
int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for iterated electric boolean games"};
  app.require_subcommand(1);

  ebg::RunRequest req;

  auto add_game = [&](CLI::App* sub) {
    sub->add_option("game", req.game_path, "game description file")->required();
  };
  auto add_strategies = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("strategies", req.strategy_paths,
                                "strategy files, one per player in player order");
    if (required) opt->required();
  };
  auto add_player = [&](CLI::App* sub) {
    sub->add_option("--player", req.player, "player name or 1-based index")->required();
  };
  auto add_budgets = [&](CLI::App* sub) {
    sub->add_option("--budget", req.node_budget, "node budget for the deviation solver")
        ->capture_default_str();
    sub->add_option("--aut-cap", req.automaton_cap, "objective automaton state cap")
        ->capture_default_str();
  };

  CLI::App* validate =
      app.add_subcommand("validate", "parse and check a game and optional strategies");
  add_game(validate);
  add_strategies(validate, false);

  CLI::App* simulate = app.add_subcommand("simulate", "print the endowment traces of a profile");
  add_game(simulate);
  add_strategies(simulate, true);
  simulate->add_option("--steps", req.steps, "number of rounds to simulate")
      ->capture_default_str();

  CLI::App* feasible = app.add_subcommand("feasible", "decide whether a profile is feasible");
  add_game(feasible);
  add_strategies(feasible, true);

  CLI::App* payoff = app.add_subcommand("payoff", "compute one player's payoff under a profile");
  add_game(payoff);
  add_strategies(payoff, true);
  add_player(payoff);

  CLI::App* deviation =
      app.add_subcommand("deviation", "search for a rational deviation of one player");
  add_game(deviation);
  add_strategies(deviation, true);
  add_player(deviation);
  add_budgets(deviation);

  CLI::App* check_ne =
      app.add_subcommand("check-ne", "decide whether a profile is a Nash equilibrium");
  add_game(check_ne);
  add_strategies(check_ne, true);
  add_budgets(check_ne);

  CLI::App* rc = app.add_subcommand(
      "rc", "search for a redistribution that makes the profile an equilibrium");
  add_game(rc);
  add_strategies(rc, true);
  add_budgets(rc);
  rc->add_option("--enum-cap", req.enumeration_cap, "redistribution enumeration cap")
      ->capture_default_str();

  CLI::App* re = app.add_subcommand(
      "re", "test whether some single-player allocation breaks the equilibrium");
  add_game(re);
  add_strategies(re, true);
  add_budgets(re);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  req.command = app.get_subcommands().front()->get_name();
  const ebg::RunReport report = ebg::run(req);
  std::fputs(report.text.c_str(), stdout);
  return report.exit_code;
}
