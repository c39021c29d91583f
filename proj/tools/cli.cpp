// Copyright 2026 The schutte Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "schutte/bounds.hpp"
#include "schutte/constructions.hpp"
#include "schutte/dice.hpp"
#include "schutte/dice_search.hpp"
#include "schutte/io.hpp"
#include "schutte/sat_search.hpp"
#include "schutte/service.hpp"

#ifndef SCHUTTE_FIXTURE_DIR
#define SCHUTTE_FIXTURE_DIR "fixtures"
#endif

namespace schutte::cli {

namespace {

using io::json;

// Reported as exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

TournamentSet LoadSet(const std::string& path) {
  return io::read_tournament_set(io::slurp(path));
}

DiceSet LoadDice(const std::string& path) { return io::read_dice_set(io::slurp(path)); }

FillPolicy Fill(const std::optional<std::uint64_t>& seed) {
  return seed ? FillPolicy::seeded(*seed) : FillPolicy::low_beats_high();
}

mpq_class ParseMargin(const std::string& text) {
  mpq_class q;
  try {
    q = mpq_class(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("margin must be a rational like 1/12, got '" + text + "'");
  }
  if (q.get_den() == 0) throw UsageError("margin has a zero denominator");
  q.canonicalize();
  if (q < 0) throw UsageError("margin must be nonnegative");
  return q;
}

std::string Percent(const mpq_class& q) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << 100.0 * q.get_d() << "%";
  return os.str();
}

// Shared output sink: either the JSON document or human lines.
struct Out {
  std::ostream& os;
  bool as_json = false;
  json doc = json::object();
  void line(const std::string& s) const {
    if (!as_json) os << s << "\n";
  }
  void flush() const {
    if (as_json) os << doc.dump(2) << "\n";
  }
};

// Emits the set as JSON or to --out / --dot files.
void EmitSet(Out& out, const TournamentSet& tau, const std::string& out_path,
             const std::string& dot_path) {
  if (!out_path.empty()) WriteFile(out_path, io::write_tournament_set(tau));
  if (!dot_path.empty()) WriteFile(dot_path, io::export_dot(tau));
  out.doc["n"] = tau.order();
  out.doc["m"] = tau.size();
  out.doc["set"] = io::to_json(tau);
  if (out_path.empty() && !out.as_json) out.os << io::write_tournament_set(tau);
}

std::string SubsetString(const VertexSubset& s) {
  std::string text = "{";
  for (int v : s.members()) text += (text.size() > 1 ? "," : "") + std::to_string(v);
  return text + "}";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& os, std::ostream& err) {
  CLI::App app{"Tournaments with the domination property S_k, bounds, SAT search and "
               "nontransitive dice"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  // Handlers return an exit code; each subcommand registers one.
  std::function<int(Out&)> handler;
  auto on = [&](CLI::App* sub, std::function<int(Out&)> fn) {
    sub->callback([&handler, fn] { handler = fn; });
  };

  // ---- tournaments -------------------------------------------------------
  std::string file;
  int k = 0;
  {
    auto* sub = app.add_subcommand("check-sk", "Decide whether a tournament set is S_k");
    sub->add_option("--file", file, "Tournament set JSON")->required();
    sub->add_option("--k", k, "Subset size")->required()->check(CLI::NonNegativeNumber);
    on(sub, [&](Out& out) {
      const TournamentSet tau = LoadSet(file);
      const bool ok = is_sk(tau, k);
      out.doc["k"] = k;
      out.doc["sk"] = ok;
      out.line("S_" + std::to_string(k) + ": " + (ok ? "true" : "false"));
      if (!ok) {
        if (auto w = undominated_witness(tau, k)) {
          out.doc["witness"] = w->members();
          out.line("undominated: " + SubsetString(*w));
        }
      }
      return ok ? kOk : kFalse;
    });
  }
  {
    auto* sub = app.add_subcommand("witness", "Lexicographically least undominated k-set");
    sub->add_option("--file", file, "Tournament set JSON")->required();
    sub->add_option("--k", k, "Subset size")->required()->check(CLI::NonNegativeNumber);
    on(sub, [&](Out& out) {
      const TournamentSet tau = LoadSet(file);
      auto w = undominated_witness(tau, k);
      out.doc["k"] = k;
      out.doc["witness"] = w ? json(w->members()) : json(nullptr);
      out.line(w ? "undominated: " + SubsetString(*w) : "none (set is S_" + std::to_string(k) + ")");
      return w ? kOk : kFalse;
    });
  }

  std::string out_path;
  std::string dot_path;
  std::optional<std::uint64_t> seed;
  int p = 0;
  {
    auto* sub = app.add_subcommand("paley", "Paley tournament on p vertices (p prime, p = 3 mod 4)");
    sub->add_option("--p", p, "Prime")->required();
    sub->add_option("--out", out_path, "Write the set to this file");
    sub->add_option("--dot", dot_path, "Write Graphviz DOT to this file");
    on(sub, [&](Out& out) {
      EmitSet(out, TournamentSet(paley(p)), out_path, dot_path);
      return kOk;
    });
  }
  std::string file_a;
  std::string file_b;
  {
    auto* sub = app.add_subcommand("combine", "Block combination of two tournament sets");
    sub->add_option("--a", file_a, "First set (block beats second in its members)")->required();
    sub->add_option("--b", file_b, "Second set")->required();
    sub->add_option("--seed", seed, "Random fill for free edges (default: lower index wins)");
    sub->add_option("--out", out_path, "Write the set to this file");
    sub->add_option("--dot", dot_path, "Write Graphviz DOT to this file");
    on(sub, [&](Out& out) {
      EmitSet(out, combine(LoadSet(file_a), LoadSet(file_b), Fill(seed)), out_path, dot_path);
      return kOk;
    });
  }
  {
    auto* sub = app.add_subcommand("rotational", "The S_k set of k+1 tournaments on k+1 vertices");
    sub->add_option("--k", k, "k")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "Random fill for free edges");
    sub->add_option("--out", out_path, "Write the set to this file");
    sub->add_option("--dot", dot_path, "Write Graphviz DOT to this file");
    on(sub, [&](Out& out) {
      EmitSet(out, rotational_set(k, Fill(seed)), out_path, dot_path);
      return kOk;
    });
  }

  // ---- bounds ------------------------------------------------------------
  int m = 1;
  {
    auto* sub = app.add_subcommand("bound", "Bounds on f(m,k)");
    sub->add_option("--m", m, "Set size")->check(CLI::PositiveNumber);
    sub->add_option("--k", k, "k")->required()->check(CLI::NonNegativeNumber);
    on(sub, [&](Out& out) {
      auto record = [&](const std::string& name, auto fn) {
        try {
          const std::int64_t v = fn();
          out.doc[name] = v;
          out.line(name + ": " + std::to_string(v));
        } catch (const BoundError& e) {
          out.doc[name] = nullptr;
          out.line(name + ": n/a (" + e.what() + ")");
        }
      };
      out.doc["m"] = m;
      out.doc["k"] = k;
      if (m == 1) {
        record("erdos_lower", [&] { return erdos_lower(k); });
        record("szekeres_lower", [&] { return szekeres_lower(k); });
        if (k >= 1) record("erdos_upper", [&] { return erdos_upper(k); });
      }
      record("closed_form_upper", [&] { return closed_form_upper(m, k); });
      record("split_dp_upper", [&] {
        auto e = split_dp_upper(m, k);
        if (!e.upper) throw BoundError(BoundErrc::kBaseTableExhausted, "no known base value");
        return *e.upper;
      });
      record("coarse_upper", [&] { return coarse_upper(m, k); });
      return kOk;
    });
  }
  int m_max = 5;
  int k_max = 8;
  {
    auto* sub = app.add_subcommand("table", "Table of best known upper bounds on f(m,k)");
    sub->add_option("--m-max", m_max, "Largest m")->check(CLI::PositiveNumber);
    sub->add_option("--k-max", k_max, "Largest k")->check(CLI::NonNegativeNumber);
    on(sub, [&](Out& out) {
      const auto grid = bounds_table(m_max, k_max);
      json cells = json::array();
      int populated = 0;
      std::ostringstream text;
      text << std::setw(4) << "k\\m";
      for (int mm = 1; mm <= m_max; ++mm) text << std::setw(8) << mm;
      text << "\n";
      for (int kk = 0; kk <= k_max; ++kk) {
        text << std::setw(4) << kk;
        for (const auto& e : grid[kk]) {
          const bool shown = e.upper && !e.redundant;
          if (shown) ++populated;
          text << std::setw(8) << (shown ? std::to_string(*e.upper) : "");
          cells.push_back({{"m", e.m},
                           {"k", e.k},
                           {"upper", e.upper ? json(*e.upper) : json(nullptr)},
                           {"provenance", to_string(e.provenance)},
                           {"redundant", e.redundant}});
        }
        text << "\n";
      }
      out.doc["m_max"] = m_max;
      out.doc["k_max"] = k_max;
      out.doc["entries"] = populated;
      out.doc["cells"] = std::move(cells);
      out.line(text.str() + std::to_string(populated) + " entries");
      return kOk;
    });
  }

  // ---- SAT ---------------------------------------------------------------
  int n = 0;
  int n_max = 0;
  bool no_symmetry = false;
  bool index_order = false;
  double time_limit = 0;
  std::uint64_t max_conflicts = 0;
  std::string external_model;
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Set size")->required()->check(CLI::PositiveNumber);
    sub->add_option("--k", k, "k")->required()->check(CLI::NonNegativeNumber);
    sub->add_flag("--no-symmetry", no_symmetry, "Disable symmetry-breaking clauses");
  };
  {
    auto* sub = app.add_subcommand("sat-find", "Search for an S_k set of m tournaments with SAT");
    add_instance(sub);
    sub->add_option("--n", n, "Exact vertex count");
    sub->add_option("--n-max", n_max, "Walk n = k+1..n-max and report f(m,k)");
    sub->add_flag("--index-order", index_order, "Branch on the lowest unassigned variable");
    sub->add_option("--time-limit", time_limit, "Seconds per instance (0 = none)");
    sub->add_option("--max-conflicts", max_conflicts, "Conflicts per instance (0 = none)");
    sub->add_option("--external-model", external_model,
                    "Verify an external solver's output for --n instead of solving");
    sub->add_option("--out", out_path, "Write the certificate set to this file");
    sub->add_option("--dot", dot_path, "Write the certificate as DOT");
    on(sub, [&](Out& out) {
      const SymmetryOptions sym = no_symmetry ? SymmetryOptions::none() : SymmetryOptions{};
      if (!external_model.empty()) {
        if (n <= 0) throw UsageError("--external-model needs --n");
        const ExternalCheck c = verify_external_model(io::slurp(external_model), m, k, n, sym);
        out.doc["accepted"] = c.accepted;
        out.doc["detail"] = c.detail;
        out.line(std::string(c.accepted ? "accepted: " : "rejected: ") + c.detail);
        if (c.certificate) EmitSet(out, *c.certificate, out_path, dot_path);
        return c.accepted ? kOk : kFalse;
      }
      SearchConfig cfg;
      cfg.symmetry = sym;
      if (index_order) cfg.solver.branching = SolverOptions::Branching::kIndexOrder;
      if (time_limit > 0) {
        cfg.budget.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
      }
      if (max_conflicts > 0) cfg.budget.max_conflicts = max_conflicts;
      auto stats_json = [](const SearchVerdict& v) {
        return json{{"status", to_string(v.status)},
                    {"conflicts", v.stats.conflicts},
                    {"decisions", v.stats.decisions},
                    {"seconds", v.stats.seconds},
                    {"attestation", v.attestation}};
      };
      if (n > 0) {
        const SearchVerdict v = search_sk_set(m, k, n, cfg);
        out.doc = stats_json(v);
        out.line("f(" + std::to_string(m) + "," + std::to_string(k) + ") at n=" +
                 std::to_string(n) + ": " + to_string(v.status) + " (" +
                 std::to_string(v.stats.conflicts) + " conflicts)");
        if (v.status == SatStatus::kUnsat) out.line("attestation: " + v.attestation);
        if (v.certificate) EmitSet(out, *v.certificate, out_path, dot_path);
        return v.status == SatStatus::kSat ? kOk : v.status == SatStatus::kUnsat ? kFalse : kUnknown;
      }
      if (n_max <= 0) throw UsageError("give --n or --n-max");
      const FExactReport rep = f_exact(m, k, n_max, cfg);
      json steps = json::array();
      for (const auto& s : rep.steps) {
        json j = stats_json(s.verdict);
        j["n"] = s.n;
        steps.push_back(std::move(j));
        out.line("  n=" + std::to_string(s.n) + ": " + to_string(s.verdict.status));
      }
      out.doc["m"] = m;
      out.doc["k"] = k;
      out.doc["steps"] = std::move(steps);
      out.doc["value"] = rep.value ? json(*rep.value) : json(nullptr);
      out.doc["lower"] = rep.lower;
      out.doc["upper"] = rep.upper ? json(*rep.upper) : json(nullptr);
      const std::string name = "f(" + std::to_string(m) + "," + std::to_string(k) + ")";
      if (rep.value) {
        out.line(name + " = " + std::to_string(*rep.value));
      } else {
        out.line(name + " >= " + std::to_string(rep.lower) +
                 (rep.upper ? ", <= " + std::to_string(*rep.upper) : ""));
      }
      if (rep.certificate) {
        if (!out_path.empty()) WriteFile(out_path, io::write_tournament_set(*rep.certificate));
        if (!dot_path.empty()) WriteFile(dot_path, io::export_dot(*rep.certificate));
        out.doc["set"] = io::to_json(*rep.certificate);
      }
      if (rep.value) return kOk;
      bool unknown = false;
      for (const auto& s : rep.steps) unknown = unknown || s.verdict.status == SatStatus::kUnknown;
      return unknown ? kUnknown : kFalse;
    });
  }
  {
    auto* sub = app.add_subcommand("export-cnf", "Write the CNF instance in DIMACS format");
    add_instance(sub);
    sub->add_option("--n", n, "Vertex count")->required();
    sub->add_option("--out", out_path, "Output file (default: standard output)");
    on(sub, [&](Out& out) {
      const Encoding enc = encode(m, k, n, no_symmetry ? SymmetryOptions::none() : SymmetryOptions{});
      const std::string text = to_dimacs(enc.formula);
      out.doc["variables"] = enc.formula.var_count;
      out.doc["clauses"] = enc.formula.clauses.size();
      out.doc["edge_variables"] = enc.vars.e_count();
      if (!out_path.empty()) {
        WriteFile(out_path, text);
        out.line(std::to_string(enc.formula.var_count) + " variables, " +
                 std::to_string(enc.formula.clauses.size()) + " clauses -> " + out_path);
      } else if (!out.as_json) {
        out.os << text;
      }
      return kOk;
    });
  }

  // ---- dice --------------------------------------------------------------
  std::string margin_text = "0";
  {
    auto* sub = app.add_subcommand("dice-verify", "Check which S_k property a dice set realizes");
    sub->add_option("--file", file, "Dice set JSON")->required();
    sub->add_option("--m", m, "Roll counts 1..m")->required()->check(CLI::PositiveNumber);
    sub->add_option("--k", k, "Expected S_k")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--margin", margin_text, "Required edge margin, e.g. 1/12");
    on(sub, [&](Out& out) {
      const DiceSet ds = LoadDice(file);
      const mpq_class margin = ParseMargin(margin_text);
      const TournamentSet tau = realized_set(ds, m, margin);
      const bool ok = is_sk(tau, k);
      out.doc["sk"] = ok;
      out.doc["k"] = k;
      out.doc["m"] = m;
      out.line("S_" + std::to_string(k) + ": " + (ok ? "true" : "false"));
      for (int r = 1; r <= m; ++r) {
        std::string row = "r=" + std::to_string(r) + ":";
        for (int d = 0; d < ds.size(); ++d) {
          row += " " + ds[d].label + "(" + std::to_string(tau[r - 1].out_degree(d)) + ")";
        }
        out.line(row);
      }
      if (ds.size() >= 2) {
        const WeakestEdge w = weakest_edge(ds, m, margin);
        out.doc["weakest_edge"] = {{"r", w.r},
                                   {"winner", ds[w.winner].label},
                                   {"loser", ds[w.loser].label},
                                   {"probability", io::to_json(w.probability)}};
        out.line("weakest edge: " + ds[w.winner].label + " over " + ds[w.loser].label +
                 " at r=" + std::to_string(w.r) + " with " + to_string(w.probability) + " (" +
                 Percent(w.probability) + ")");
      }
      out.doc["set"] = io::to_json(tau);
      return ok ? kOk : kFalse;
    });
  }
  {
    auto* sub = app.add_subcommand("dice-tournaments", "Tournaments realized at 1..m rolls");
    sub->add_option("--file", file, "Dice set JSON")->required();
    sub->add_option("--m", m, "Roll counts 1..m")->required()->check(CLI::PositiveNumber);
    sub->add_option("--margin", margin_text, "Required edge margin, e.g. 1/12");
    sub->add_option("--out", out_path, "Write the set to this file");
    sub->add_option("--dot", dot_path, "Write Graphviz DOT to this file");
    on(sub, [&](Out& out) {
      const DiceSet ds = LoadDice(file);
      EmitSet(out, realized_set(ds, m, ParseMargin(margin_text)), out_path, dot_path);
      return kOk;
    });
  }
  std::vector<std::string> opponents;
  {
    auto* sub = app.add_subcommand("advise", "Pick a die and roll count beating every opponent");
    sub->add_option("--file", file, "Dice set JSON")->required();
    sub->add_option("--opponents", opponents, "Opponent labels")->required()->delimiter(',');
    sub->add_option("--m", m, "Largest roll count allowed (default: number of dice)")
        ->check(CLI::PositiveNumber);
    on(sub, [&, sub](Out& out) {
      const DiceSet ds = LoadDice(file);
      if (sub->count("--m") == 0) m = ds.size();
      try {
        const Advice a = advise(ds, opponents, m);
        out.doc["die"] = a.label;
        out.doc["index"] = a.die;
        out.doc["rolls"] = a.rolls;
        out.doc["odds"] = json::array();
        out.line("choose " + a.label + " and roll " + std::to_string(a.rolls) + " time(s)");
        for (std::size_t i = 0; i < opponents.size(); ++i) {
          json o = io::to_json(a.odds[i]);
          o["opponent"] = opponents[i];
          out.doc["odds"].push_back(std::move(o));
          out.line("  vs " + opponents[i] + ": win " + to_string(a.odds[i].win) + " (" +
                   Percent(a.odds[i].win) + "), tie " + to_string(a.odds[i].tie));
        }
        return kOk;
      } catch (const NoDominatingChoice& e) {
        out.doc["die"] = nullptr;
        out.doc["error"] = e.what();
        out.line(e.what());
        return kFalse;
      }
    });
  }
  std::string die_a;
  std::string die_b;
  int rolls = 1;
  std::uint64_t trials = 10000;
  std::uint64_t sim_seed = 0;
  {
    auto* sub = app.add_subcommand("simulate", "Seeded Monte Carlo roll-off between two dice");
    sub->add_option("--file", file, "Dice set JSON")->required();
    sub->add_option("--a", die_a, "First die label")->required();
    sub->add_option("--b", die_b, "Second die label")->required();
    sub->add_option("--r", rolls, "Rolls per side")->check(CLI::Range(1, kMaxRolls));
    sub->add_option("--trials", trials, "Number of roll-offs")->check(CLI::PositiveNumber);
    sub->add_option("--seed", sim_seed, "Generator seed");
    on(sub, [&](Out& out) {
      const DiceSet ds = LoadDice(file);
      auto ia = ds.index_of(die_a);
      auto ib = ds.index_of(die_b);
      if (!ia || !ib) throw UsageError("unknown die label");
      const Tally t = simulate(ds[*ia], ds[*ib], rolls, trials, sim_seed);
      const WinOdds exact = win_odds(ds[*ia], ds[*ib], rolls);
      out.doc = {{"a", die_a}, {"b", die_b}, {"r", rolls}, {"trials", trials},
                 {"seed", sim_seed}, {"wins", t.wins}, {"ties", t.ties},
                 {"losses", t.losses}, {"exact", io::to_json(exact)}};
      out.line(die_a + " vs " + die_b + " (r=" + std::to_string(rolls) + "): " +
               std::to_string(t.wins) + " wins, " + std::to_string(t.ties) + " ties, " +
               std::to_string(t.losses) + " losses; exact win " + to_string(exact.win));
      return kOk;
    });
  }
  int faces = 3;
  std::int64_t max_face = 9;
  std::uint64_t max_nodes = 50'000'000;
  {
    auto* sub = app.add_subcommand("dice-search", "Search for dice realizing a tournament set");
    sub->add_option("--target", file, "Tournament set JSON (member r is the r-roll target)")
        ->required();
    sub->add_option("--faces", faces, "Faces per die")->check(CLI::PositiveNumber);
    sub->add_option("--max-face", max_face, "Largest face value")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-nodes", max_nodes, "Node budget");
    sub->add_option("--time-limit", time_limit, "Seconds (0 = none)");
    sub->add_option("--out", out_path, "Write the dice set to this file");
    on(sub, [&](Out& out) {
      SearchSpace space;
      space.faces_per_die = faces;
      space.max_face = max_face;
      space.max_nodes = max_nodes;
      if (time_limit > 0) {
        space.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
      }
      const DiceSearchResult res = search_multiroll(LoadSet(file), space);
      out.doc["status"] = to_string(res.status);
      out.doc["nodes"] = res.nodes;
      out.line(to_string(res.status) + " after " + std::to_string(res.nodes) + " nodes");
      if (res.dice) {
        out.doc["dice"] = io::to_json(*res.dice);
        if (!out_path.empty()) WriteFile(out_path, io::write_dice_set(*res.dice));
        if (out_path.empty() && !out.as_json) out.os << io::write_dice_set(*res.dice);
      }
      switch (res.status) {
        case DiceSearchStatus::kFound: return kOk;
        case DiceSearchStatus::kExhausted: return kFalse;
        case DiceSearchStatus::kUnknown: return kUnknown;
      }
      return kUnknown;
    });
  }
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string fixtures;
  {
    auto* sub = app.add_subcommand("serve", "Run the JSON API for the dice game");
    sub->add_option("--host", host, "Bind address");
    sub->add_option("--port", port, "Port (0 = any free port)");
    sub->add_option("--fixtures", fixtures,
                    std::string("Fixture directory (default: $") + service::kFixtureEnv +
                        " or the bundled fixtures)");
    on(sub, [&](Out& out) {
      const auto dir = fixtures.empty()
                           ? service::DiceService::fixture_dir(SCHUTTE_FIXTURE_DIR)
                           : std::filesystem::path(fixtures);
      const auto svc = service::DiceService::from_directory(dir);
      service::HttpServer server(svc);
      const int bound = server.bind(host, port);
      if (bound < 0) throw UsageError("cannot bind " + host + ":" + std::to_string(port));
      out.os << "serving " << svc.catalog().size() << " dice set(s) from " << dir.string()
             << " on http://" << host << ":" << bound << std::endl;
      return server.listen() ? kOk : kUsage;
    });
  }

  std::vector<const char*> argv;
  argv.push_back("schutte");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, os, err);
    return code == 0 ? kOk : kUsage;
  }

  Out out{os, as_json};
  try {
    const int code = handler(out);
    out.flush();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    // invalid_argument and friends: malformed input files or arguments.
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace schutte::cli
