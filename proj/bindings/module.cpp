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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ebg/deviation.hpp"
#include "ebg/equilibrium.hpp"
#include "ebg/errors.hpp"
#include "ebg/feasibility.hpp"
#include "ebg/io.hpp"
#include "ebg/redistribution.hpp"

namespace py = pybind11;

namespace {

py::dict feasibility_dict(const ebg::EbgGame& g, const ebg::FeasibilityResult& res) {
  py::dict out;
  out["feasible"] = res.feasible;
  if (res.violation) {
    py::dict v;
    v["player"] = g.player_name(static_cast<std::size_t>(res.violation->player));
    v["index"] = res.violation->player + 1;
    v["step"] = res.violation->step;
    v["value"] = res.violation->value;
    out["violation"] = v;
  }
  if (res.positive_cycle) {
    py::dict c;
    c["player"] = g.player_name(static_cast<std::size_t>(res.positive_cycle->player));
    c["index"] = res.positive_cycle->player + 1;
    c["total"] = res.positive_cycle->total;
    out["positive_cycle"] = c;
  }
  return out;
}

py::dict deviation_dict(const ebg::EbgGame& g, const ebg::DeviationResult& res) {
  py::dict out;
  out["verdict"] = ebg::to_string(res.verdict);
  out["nodes_explored"] = res.nodes_explored;
  if (res.deviation) {
    out["deviator"] = g.player_name(static_cast<std::size_t>(res.deviation->deviator));
    out["strategy"] = ebg::serialize_strategy(g, res.deviation->machine);
  }
  return out;
}

py::dict nem_dict(const ebg::EbgGame& g, const ebg::NemVerdict& v) {
  py::dict out;
  switch (v.outcome) {
    case ebg::NemOutcome::Equilibrium:
      out["verdict"] = "equilibrium";
      break;
    case ebg::NemOutcome::NotEquilibrium:
      out["verdict"] = "not-equilibrium";
      break;
    case ebg::NemOutcome::Unknown:
      out["verdict"] = "unknown";
      break;
  }
  py::dict payoffs;
  for (std::size_t i = 0; i < g.player_count(); ++i)
    payoffs[py::str(g.player_name(i))] = v.payoffs[i];
  out["payoffs"] = payoffs;
  if (v.infeasibility) {
    ebg::FeasibilityResult inf{false, v.infeasibility, v.positive_cycle};
    out["infeasibility"] = feasibility_dict(g, inf);
  }
  if (v.deviation) {
    out["deviator"] = g.player_name(static_cast<std::size_t>(v.deviation->deviator));
    out["strategy"] = ebg::serialize_strategy(g, v.deviation->machine);
  }
  if (v.unknown_player)
    out["unknown_player"] = g.player_name(static_cast<std::size_t>(*v.unknown_player));
  out["solver_calls"] = v.solver_calls;
  return out;
}

py::dict redistribution_dict(const ebg::EbgGame& g, const ebg::RedistributionResult& res) {
  py::dict out;
  out["verdict"] = ebg::to_string(res.verdict);
  out["candidates_tried"] = res.candidates_tried;
  if (res.endowments) {
    py::dict e;
    for (std::size_t i = 0; i < g.player_count(); ++i)
      e[py::str(g.player_name(i))] = (*res.endowments)[i];
    out["endowments"] = e;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_ebgverify, m) {
  m.doc() = "verification toolkit for iterated electric boolean games";

  py::register_exception<ebg::Error>(m, "EbgError");

  py::class_<ebg::EbgGame>(m, "Game")
      .def_property_readonly("players", &ebg::EbgGame::player_names)
      .def_property_readonly("atoms",
                             [](const ebg::EbgGame& g) { return g.atoms(); })
      .def_property_readonly("endowments", &ebg::EbgGame::endowments)
      .def("atoms_of", [](const ebg::EbgGame& g, std::size_t i) { return g.atoms_of_player(i); })
      .def("objective",
           [](const ebg::EbgGame& g, std::size_t i) { return g.objective(i).to_string(); })
      .def("cost", &ebg::EbgGame::cost)
      .def("with_endowments", &ebg::EbgGame::with_endowments)
      .def("serialize", &ebg::serialize_game)
      .def("__eq__", [](const ebg::EbgGame& a, const ebg::EbgGame& b) { return a == b; });

  py::class_<ebg::StrategyMachine>(m, "Strategy")
      .def_property_readonly("owner", &ebg::StrategyMachine::owner)
      .def_property_readonly("state_count", &ebg::StrategyMachine::state_count)
      .def("state_name", &ebg::StrategyMachine::state_name);

  m.def("parse_game", &ebg::parse_game_text, py::arg("text"),
        "Parse a game description from text.");
  m.def(
      "parse_strategy",
      [](const std::string& text, const ebg::EbgGame& g, int player) {
        return ebg::parse_strategy(text, g, player);
      },
      py::arg("text"), py::arg("game"), py::arg("player"),
      "Parse a strategy machine for one player of a game.");
  m.def("serialize_strategy", &ebg::serialize_strategy, py::arg("game"), py::arg("strategy"));

  m.def(
      "feasible",
      [](const ebg::EbgGame& g, const ebg::Profile& profile) {
        return feasibility_dict(g, ebg::is_feasible(g, profile));
      },
      py::arg("game"), py::arg("profile"),
      "Decide feasibility of a profile; reports the earliest violation if any.");

  m.def(
      "payoff",
      [](const ebg::EbgGame& g, const ebg::Profile& profile, int player) {
        return ebg::payoff(g, profile, player);
      },
      py::arg("game"), py::arg("profile"), py::arg("player"));

  m.def(
      "deviation",
      [](const ebg::EbgGame& g, const ebg::Profile& profile, int player,
         std::size_t node_budget, std::size_t automaton_cap) {
        return deviation_dict(
            g, ebg::has_rational_deviation(g, profile, player, node_budget, automaton_cap));
      },
      py::arg("game"), py::arg("profile"), py::arg("player"),
      py::arg("node_budget") = ebg::kDefaultNodeBudget,
      py::arg("automaton_cap") = ebg::kDefaultAutomatonStateCap,
      "Search for a rational deviation of one player from a feasible profile.");

  m.def(
      "check_ne",
      [](const ebg::EbgGame& g, const ebg::Profile& profile, std::size_t node_budget,
         std::size_t automaton_cap) {
        return nem_dict(g, ebg::is_nash_equilibrium(g, profile, node_budget, automaton_cap));
      },
      py::arg("game"), py::arg("profile"), py::arg("node_budget") = ebg::kDefaultNodeBudget,
      py::arg("automaton_cap") = ebg::kDefaultAutomatonStateCap,
      "Decide whether a profile is a Nash equilibrium.");

  m.def(
      "rational_construction",
      [](const ebg::EbgGame& g, const ebg::Profile& profile, std::size_t node_budget,
         std::uint64_t enumeration_cap, std::size_t automaton_cap) {
        return redistribution_dict(
            g, ebg::rational_construction(g, profile, node_budget, enumeration_cap,
                                          automaton_cap));
      },
      py::arg("game"), py::arg("profile"), py::arg("node_budget") = ebg::kDefaultNodeBudget,
      py::arg("enumeration_cap") = ebg::kDefaultEnumerationCap,
      py::arg("automaton_cap") = ebg::kDefaultAutomatonStateCap,
      "Search for a redistribution of the endowment pot that makes the profile an equilibrium.");

  m.def(
      "rational_elimination",
      [](const ebg::EbgGame& g, const ebg::Profile& profile, std::size_t node_budget,
         std::size_t automaton_cap) {
        return redistribution_dict(
            g, ebg::rational_elimination(g, profile, node_budget, automaton_cap));
      },
      py::arg("game"), py::arg("profile"), py::arg("node_budget") = ebg::kDefaultNodeBudget,
      py::arg("automaton_cap") = ebg::kDefaultAutomatonStateCap,
      "Test whether some single-player allocation of the pot breaks the equilibrium.");

  m.def(
      "run",
      [](const ebg::RunRequest& req) {
        const ebg::RunReport rep = ebg::run(req);
        return py::make_tuple(rep.exit_code, rep.text);
      },
      py::arg("request"), "Execute a command-line request and return (exit_code, report_text).");

  py::class_<ebg::RunRequest>(m, "RunRequest")
      .def(py::init<>())
      .def_readwrite("command", &ebg::RunRequest::command)
      .def_readwrite("game_path", &ebg::RunRequest::game_path)
      .def_readwrite("strategy_paths", &ebg::RunRequest::strategy_paths)
      .def_readwrite("player", &ebg::RunRequest::player)
      .def_readwrite("steps", &ebg::RunRequest::steps)
      .def_readwrite("node_budget", &ebg::RunRequest::node_budget)
      .def_readwrite("enumeration_cap", &ebg::RunRequest::enumeration_cap)
      .def_readwrite("automaton_cap", &ebg::RunRequest::automaton_cap);
}
