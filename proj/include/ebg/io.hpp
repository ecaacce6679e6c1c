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

#ifndef EBG_IO_HPP_
#define EBG_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ebg/buchi.hpp"
#include "ebg/energy.hpp"
#include "ebg/game.hpp"
#include "ebg/redistribution.hpp"
#include "ebg/strategy.hpp"

namespace ebg {

// Game text format, line oriented ('#' starts a comment):
//   player <name>
//   atoms <player>: <atom> ...
//   cost <atom> <true|false> <int>
//   endow <player> <nat>
//   objective <player>: <LTL>
// Players must be declared before they are referenced.  The result is fully
// validated (see validate_game).
EbgGame parse_game_text(std::string_view text);
EbgGame parse_game_file(const std::string& path);

// Canonical rendering; parse_game_text(serialize_game(g)) == g.
std::string serialize_game(const EbgGame& g);

StrategyMachine parse_strategy_file(const std::string& path, const EbgGame& g, int player);

// Canonical rendering; parse_strategy(serialize_strategy(g, m), g, owner)
// reproduces the machine.
std::string serialize_strategy(const EbgGame& g, const StrategyMachine& m);

// One tool invocation.  `player` accepts a player name or a 1-based index
// and is required by the payoff and deviation commands.
struct RunRequest {
  std::string command;  // validate|simulate|feasible|payoff|deviation|check-ne|rc|re
  std::string game_path;
  std::vector<std::string> strategy_paths;  // player order; full profile where needed
  std::string player;
  std::int64_t steps = 10;
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t automaton_cap = kDefaultAutomatonStateCap;
};

// Exit codes: 0 affirmative verdict, 1 negative verdict, 2 inconclusive
// (budget exhausted), 3 input or usage error.
struct RunReport {
  int exit_code = 3;
  std::string text;  // human-readable part, blank line, key=value block
};

// Executes a request.  Never throws: failures become exit-code-3 reports.
// Identical requests over identical files produce byte-identical text.
RunReport run(const RunRequest& request);

}  // namespace ebg

#endif  // EBG_IO_HPP_
