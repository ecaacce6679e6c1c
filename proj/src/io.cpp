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

#include "ebg/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ebg/deviation.hpp"
#include "ebg/equilibrium.hpp"
#include "ebg/errors.hpp"
#include "ebg/feasibility.hpp"

namespace ebg {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::int64_t parse_int(const std::string& w, std::size_t lineno) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(w, &used);
    if (used != w.size()) throw std::invalid_argument(w);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + w + "'", lineno, 1);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Game format.

EbgGame parse_game_text(std::string_view text) {
  RawGame raw;
  std::map<std::string, std::size_t> index;

  auto player_at = [&](const std::string& name, std::size_t lineno) -> RawGame::Player& {
    auto it = index.find(name);
    if (it == index.end())
      throw ParseError("player '" + name + "' has not been declared", lineno, 1);
    return raw.players[it->second];
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string payload = line.substr(0, line.find('#'));
    auto words = split_ws(payload);
    if (words.empty()) continue;
    const std::string& directive = words[0];

    if (directive == "player") {
      if (words.size() != 2) throw ParseError("expected 'player <name>'", lineno, 1);
      if (index.count(words[1]))
        throw ParseError("player '" + words[1] + "' declared twice", lineno, 1);
      index[words[1]] = raw.players.size();
      raw.players.push_back({words[1], {}, "", 0, false, false});
    } else if (directive == "atoms") {
      const std::size_t colon = payload.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected 'atoms <player>: <atom> ...'", lineno, 1);
      auto head = split_ws(payload.substr(0, colon));
      auto tail = split_ws(payload.substr(colon + 1));
      if (head.size() != 2 || tail.empty())
        throw ParseError("expected 'atoms <player>: <atom> ...'", lineno, 1);
      RawGame::Player& p = player_at(head[1], lineno);
      p.atoms.insert(p.atoms.end(), tail.begin(), tail.end());
    } else if (directive == "cost") {
      if (words.size() != 4 || (words[2] != "true" && words[2] != "false"))
        throw ParseError("expected 'cost <atom> <true|false> <int>'", lineno, 1);
      const bool value = words[2] == "true";
      if (raw.cost.count({words[1], value}))
        throw ParseError("duplicate cost entry for '" + words[1] + " " + words[2] + "'", lineno,
                         1);
      raw.cost[{words[1], value}] = parse_int(words[3], lineno);
    } else if (directive == "endow") {
      if (words.size() != 3) throw ParseError("expected 'endow <player> <amount>'", lineno, 1);
      RawGame::Player& p = player_at(words[1], lineno);
      if (p.has_endowment)
        throw ParseError("duplicate endowment for player '" + words[1] + "'", lineno, 1);
      p.endowment = parse_int(words[2], lineno);
      p.has_endowment = true;
    } else if (directive == "objective") {
      const std::size_t colon = payload.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected 'objective <player>: <LTL>'", lineno, 1);
      auto head = split_ws(payload.substr(0, colon));
      const std::string body = trim(payload.substr(colon + 1));
      if (head.size() != 2 || body.empty())
        throw ParseError("expected 'objective <player>: <LTL>'", lineno, 1);
      RawGame::Player& p = player_at(head[1], lineno);
      if (p.has_objective)
        throw ParseError("duplicate objective for player '" + head[1] + "'", lineno, 1);
      p.objective_text = body;
      p.has_objective = true;
    } else {
      throw ParseError("unknown directive '" + directive + "'", lineno, 1);
    }
  }
  return validate_game(raw);
}

EbgGame parse_game_file(const std::string& path) {
  try {
    return parse_game_text(read_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string serialize_game(const EbgGame& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    const std::string& name = g.player_name(i);
    os << "player " << name << '\n';
    if (!g.atoms_of_player(i).empty()) {
      os << "atoms " << name << ":";
      for (const auto& a : g.atoms_of_player(i)) os << ' ' << a;
      os << '\n';
    }
    os << "endow " << name << ' ' << g.endowment(i) << '\n';
    os << "objective " << name << ": " << g.objective(i).to_string() << '\n';
  }
  for (const auto& a : g.atoms()) {
    os << "cost " << a << " false " << g.cost(a, false) << '\n';
    os << "cost " << a << " true " << g.cost(a, true) << '\n';
  }
  return os.str();
}

StrategyMachine parse_strategy_file(const std::string& path, const EbgGame& g, int player) {
  try {
    return parse_strategy(read_file(path), g, player);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string serialize_strategy(const EbgGame& g, const StrategyMachine& m) {
  (void)g;
  std::ostringstream os;
  os << "init " << m.state_name(static_cast<std::size_t>(m.initial())) << '\n';
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    os << "state " << m.state_name(s) << " choose";
    const Valuation& ch = m.choice(s);
    for (std::size_t k = 0; k < ch.atoms().size(); ++k) {
      os << (k == 0 ? " " : ", ") << ch.atoms()[k] << '='
         << (ch.value(ch.atoms()[k]) ? "true" : "false");
    }
    os << '\n';
  }
  for (std::size_t s = 0; s < m.state_count(); ++s)
    for (const GuardedUpdate& u : m.updates(s))
      os << "from " << m.state_name(s) << " on "
         << (u.guard ? u.guard->to_string() : std::string("*")) << " goto "
         << m.state_name(static_cast<std::size_t>(u.target)) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Command execution.

namespace {

struct ReportBuilder {
  std::ostringstream human;
  std::ostringstream block;

  void note(const std::string& s) { human << s << '\n'; }
  void raw(const std::string& s) { human << s; }
  void kv(const std::string& k, const std::string& v) { block << k << '=' << v << '\n'; }
  void kv(const std::string& k, std::int64_t v) { kv(k, std::to_string(v)); }
  std::string finish() const {
    const std::string h = human.str();
    const std::string b = block.str();
    return h.empty() ? b : h + "\n" + b;
  }
};

std::string join_letters(const std::vector<Valuation>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += letters[i].to_string();
  }
  return out;
}

std::string join_values(const std::vector<std::int64_t>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

int resolve_player(const EbgGame& g, const std::string& spec) {
  if (spec.empty())
    throw ValidationError("this command requires --player (a name or 1-based index)");
  const int byname = g.player_index(spec);
  if (byname >= 0) return byname;
  try {
    std::size_t used = 0;
    const long k = std::stol(spec, &used);
    if (used == spec.size() && k >= 1 && static_cast<std::size_t>(k) <= g.player_count())
      return static_cast<int>(k - 1);
  } catch (const std::exception&) {
  }
  throw ValidationError("unknown player '" + spec + "'");
}

Profile load_profile(const EbgGame& g, const std::vector<std::string>& paths) {
  if (paths.size() != g.player_count())
    throw ValidationError("expected " + std::to_string(g.player_count()) +
                          " strategy files (one per player, in player order), got " +
                          std::to_string(paths.size()));
  Profile profile;
  for (std::size_t i = 0; i < paths.size(); ++i)
    profile.push_back(parse_strategy_file(paths[i], g, static_cast<int>(i)));
  return profile;
}

void emit_violation(ReportBuilder& rb, const EbgGame& g, const EnergyViolation& v,
                    const std::optional<PositiveCycle>& pc) {
  const std::string& name = g.player_name(static_cast<std::size_t>(v.player));
  rb.note("player '" + name + "' reaches endowment " + std::to_string(v.value) + " at step " +
          std::to_string(v.step));
  rb.kv("violation.player", name);
  rb.kv("violation.index", static_cast<std::int64_t>(v.player) + 1);
  rb.kv("violation.step", v.step);
  rb.kv("violation.value", v.value);
  if (pc) {
    const std::string& pname = g.player_name(static_cast<std::size_t>(pc->player));
    rb.note("cause: player '" + pname + "' loses " + std::to_string(pc->total) +
            " per cycle round");
    rb.kv("positive_cycle.player", pname);
    rb.kv("positive_cycle.index", static_cast<std::int64_t>(pc->player) + 1);
    rb.kv("positive_cycle.total", pc->total);
  }
}

void emit_deviation(ReportBuilder& rb, const EbgGame& g, const RationalDeviation& dev) {
  const std::string& name = g.player_name(static_cast<std::size_t>(dev.deviator));
  rb.note("player '" + name + "' has a rational deviation:");
  rb.raw(serialize_strategy(g, dev.machine));
  rb.kv("deviator", name);
  rb.kv("deviator.index", static_cast<std::int64_t>(dev.deviator) + 1);
  rb.kv("witness.stem", join_letters(dev.stem_letters));
  rb.kv("witness.cycle", join_letters(dev.segment_letters));
}

int cmd_validate(const RunRequest& req, ReportBuilder& rb) {
  const EbgGame g = parse_game_file(req.game_path);
  rb.note("game '" + req.game_path + "' is valid");
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    std::string atoms;
    for (const auto& a : g.atoms_of_player(i)) atoms += (atoms.empty() ? "" : " ") + a;
    rb.note("player " + g.player_name(i) + ": atoms [" + atoms + "], endowment " +
            std::to_string(g.endowment(i)) + ", objective " + g.objective(i).to_string());
  }
  if (!req.strategy_paths.empty()) {
    const Profile profile = load_profile(g, req.strategy_paths);
    for (std::size_t i = 0; i < profile.size(); ++i)
      rb.note("strategy for " + g.player_name(i) + ": " +
              std::to_string(profile[i].state_count()) + " memory state(s)");
    rb.kv("strategies", static_cast<std::int64_t>(profile.size()));
  }
  rb.kv("verdict", "valid");
  rb.kv("players", static_cast<std::int64_t>(g.player_count()));
  rb.kv("atoms", static_cast<std::int64_t>(g.atoms().size()));
  return 0;
}

int cmd_simulate(const RunRequest& req, ReportBuilder& rb) {
  const EbgGame g = parse_game_file(req.game_path);
  const Profile profile = load_profile(g, req.strategy_paths);
  if (req.steps < 0) throw ValidationError("--steps must be nonnegative");
  const auto horizon = static_cast<std::size_t>(req.steps);

  std::vector<std::vector<std::int64_t>> traces;
  for (std::size_t i = 0; i < g.player_count(); ++i)
    traces.push_back(endowment_trace(g, profile, static_cast<int>(i), horizon));

  std::string header = "t";
  for (std::size_t i = 0; i < g.player_count(); ++i) header += "\t" + g.player_name(i);
  rb.note(header);
  for (std::size_t t = 0; t <= horizon; ++t) {
    std::string row = std::to_string(t);
    for (std::size_t i = 0; i < g.player_count(); ++i) row += "\t" + std::to_string(traces[i][t]);
    rb.note(row);
  }
  rb.kv("verdict", "simulated");
  rb.kv("steps", req.steps);
  for (std::size_t i = 0; i < g.player_count(); ++i)
    rb.kv("endowment." + g.player_name(i), join_values(traces[i]));
  return 0;
}

int cmd_feasible(const RunRequest& req, ReportBuilder& rb) {
  const EbgGame g = parse_game_file(req.game_path);
  const Profile profile = load_profile(g, req.strategy_paths);
  const FeasibilityResult res = is_feasible(g, profile);
  if (res.feasible) {
    const InducedPlay play = induced_lasso(g, profile);
    rb.note("the profile is feasible");
    rb.note("play: stem [" + join_letters(play.lasso.stem) + "] cycle [" +
            join_letters(play.lasso.cycle) + "]");
    rb.kv("verdict", "feasible");
    rb.kv("witness.stem", join_letters(play.lasso.stem));
    rb.kv("witness.cycle", join_letters(play.lasso.cycle));
    return 0;
  }
  rb.note("the profile is infeasible");
  rb.kv("verdict", "infeasible");
  emit_violation(rb, g, *res.violation, res.positive_cycle);
  return 1;
}

int cmd_payoff(const RunRequest& req, ReportBuilder& rb) {
  const EbgGame g = parse_game_file(req.game_path);
  const Profile profile = load_profile(g, req.strategy_paths);
  const int player = resolve_player(g, req.player);
  const int value = payoff(g, profile, player);
  const std::string& name = g.player_name(static_cast<std::size_t>(player));
  rb.note("player '" + name + "' attains payoff " + std::to_string(value));
  rb.kv("verdict", value == 1 ? "satisfied" : "unsatisfied");
  rb.kv("player", name);
  rb.kv("payoff", value);
  return value == 1 ? 0 : 1;
}

int cmd_deviation(const RunRequest& req, ReportBuilder& rb) {
  const EbgGame g = parse_game_file(req.game_path);
  const Profile profile = load_profile(g, req.strategy_paths);
  const int player = resolve_player(g, req.player);
  const std::string& name = g.player_name(static_cast<std::size_t>(player));

  // A satisfied player's payoff cannot improve; the question is settled
  // without touching the solver.  (Infeasible profiles are a usage error and
  // surface as exit 3 via the precondition check below.)
  if (is_feasible(g, profile).feasible &&
      eval_lasso(g.objective(static_cast<std::size_t>(player)),
                 induced_lasso(g, profile).lasso)) {
    rb.note("player '" + name + "' already attains payoff 1; no deviation can improve it");
    rb.kv("verdict", "none");
    rb.kv("player", name);
    return 1;
  }

  const DeviationResult res =
      has_rational_deviation(g, profile, player, req.node_budget, req.automaton_cap);
  if (res.verdict == Verdict::Yes) {
    emit_deviation(rb, g, *res.deviation);
    rb.kv("verdict", "deviation");
    return 0;
  }
  if (res.verdict == Verdict::No) {
    rb.note("player '" + name + "' has no rational deviation");
    rb.kv("verdict", "none");
    rb.kv("player", name);
    return 1;
  }
  rb.note("inconclusive: the search budget of " + std::to_string(req.node_budget) +
          " nodes was exhausted (raise --budget)");
  rb.kv("verdict", "unknown");
  rb.kv("player", name);
  return 2;
}

int cmd_check_ne(const RunRequest& req, ReportBuilder& rb) {
  const EbgGame g = parse_game_file(req.game_path);
  const Profile profile = load_profile(g, req.strategy_paths);
  const NemVerdict v = is_nash_equilibrium(g, profile, req.node_budget, req.automaton_cap);

  if (v.outcome == NemOutcome::NotEquilibrium && v.infeasibility) {
    rb.note("not a Nash equilibrium: the profile is infeasible");
    rb.kv("verdict", "not-equilibrium");
    emit_violation(rb, g, *v.infeasibility, v.positive_cycle);
    return 1;
  }

  for (std::size_t i = 0; i < g.player_count(); ++i)
    rb.kv("payoff." + g.player_name(i), v.payoffs[i]);

  if (v.outcome == NemOutcome::Equilibrium) {
    rb.note("the profile is a Nash equilibrium");
    rb.kv("verdict", "equilibrium");
    return 0;
  }
  if (v.outcome == NemOutcome::NotEquilibrium) {
    rb.note("not a Nash equilibrium:");
    rb.kv("verdict", "not-equilibrium");
    emit_deviation(rb, g, *v.deviation);
    return 1;
  }
  const std::string& name = g.player_name(static_cast<std::size_t>(*v.unknown_player));
  rb.note("inconclusive: the deviation check for player '" + name +
          "' exhausted its search budget (raise --budget)");
  rb.kv("verdict", "unknown");
  rb.kv("unknown.player", name);
  return 2;
}

void emit_redistribution(ReportBuilder& rb, const EbgGame& g,
                         const RedistributionResult& res) {
  std::string pretty;
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    if (i) pretty += ", ";
    pretty += g.player_name(i) + "=" + std::to_string((*res.endowments)[i]);
  }
  rb.note("redistribution found after " + std::to_string(res.candidates_tried) +
          " candidate(s): " + pretty);
  rb.kv("verdict", "redistribution");
  rb.kv("redistribution", join_values(*res.endowments));
  for (std::size_t i = 0; i < g.player_count(); ++i)
    rb.kv("endowment." + g.player_name(i), (*res.endowments)[i]);
  rb.kv("candidates", static_cast<std::int64_t>(res.candidates_tried));
}

int cmd_rc(const RunRequest& req, ReportBuilder& rb) {
  const EbgGame g = parse_game_file(req.game_path);
  const Profile profile = load_profile(g, req.strategy_paths);
  const RedistributionResult res = rational_construction(
      g, profile, req.node_budget, req.enumeration_cap, req.automaton_cap);
  if (res.verdict == Verdict::Yes) {
    emit_redistribution(rb, g, res);
    return 0;
  }
  if (res.verdict == Verdict::No) {
    rb.note("no redistribution makes the profile a Nash equilibrium (" +
            std::to_string(res.candidates_tried) + " candidate(s) checked)");
    rb.kv("verdict", "none");
    rb.kv("candidates", static_cast<std::int64_t>(res.candidates_tried));
    return 1;
  }
  rb.note("inconclusive: some candidate checks exhausted the search budget (raise --budget)");
  rb.kv("verdict", "unknown");
  return 2;
}

int cmd_re(const RunRequest& req, ReportBuilder& rb) {
  const EbgGame g = parse_game_file(req.game_path);
  const Profile profile = load_profile(g, req.strategy_paths);
  const RedistributionResult res =
      rational_elimination(g, profile, req.node_budget, req.automaton_cap);
  if (res.verdict == Verdict::Yes) {
    emit_redistribution(rb, g, res);
    if (res.certificate && res.certificate->infeasibility) {
      const auto& viol = *res.certificate->infeasibility;
      rb.note("under it the profile is infeasible for player '" +
              g.player_name(static_cast<std::size_t>(viol.player)) + "'");
    } else if (res.certificate && res.certificate->deviation) {
      rb.note("under it player '" +
              g.player_name(static_cast<std::size_t>(res.certificate->deviation->deviator)) +
              "' gains a rational deviation");
    }
    return 0;
  }
  if (res.verdict == Verdict::No) {
    rb.note("the profile stays a Nash equilibrium under every single-player allocation");
    rb.kv("verdict", "none");
    rb.kv("candidates", static_cast<std::int64_t>(res.candidates_tried));
    return 1;
  }
  rb.note("inconclusive: some candidate checks exhausted the search budget (raise --budget)");
  rb.kv("verdict", "unknown");
  return 2;
}

}  // namespace

RunReport run(const RunRequest& req) {
  ReportBuilder rb;
  try {
    int code;
    if (req.command == "validate")
      code = cmd_validate(req, rb);
    else if (req.command == "simulate")
      code = cmd_simulate(req, rb);
    else if (req.command == "feasible")
      code = cmd_feasible(req, rb);
    else if (req.command == "payoff")
      code = cmd_payoff(req, rb);
    else if (req.command == "deviation")
      code = cmd_deviation(req, rb);
    else if (req.command == "check-ne")
      code = cmd_check_ne(req, rb);
    else if (req.command == "rc")
      code = cmd_rc(req, rb);
    else if (req.command == "re")
      code = cmd_re(req, rb);
    else
      throw ValidationError("unknown command '" + req.command + "'");
    return {code, rb.finish()};
  } catch (const std::exception& e) {
    ReportBuilder err;
    err.note(std::string("error: ") + e.what());
    err.kv("verdict", "error");
    return {3, err.finish()};
  }
}

}  // namespace ebg
