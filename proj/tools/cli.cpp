#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "hanoi/graphs.hpp"
#include "hanoi/io.hpp"
#include "hanoi/model.hpp"
#include "hanoi/oracle.hpp"
#include "hanoi/recurrence.hpp"
#include "hanoi/solvers.hpp"
#include "hanoi/verify.hpp"

namespace hanoi::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string model = "classical";
  std::optional<std::string> edges;
  std::optional<int> distance;
  int n = 3;
  int from = 1;
  int to = 2;
  std::string format = "plain";
  std::size_t max_states = kDefaultMaxStates;
};

void add_common(CLI::App* sub, CommonFlags& f, bool with_pegs) {
  sub->add_option("--model", f.model, "classical | digraph | relaxed | custom")
      ->check(CLI::IsMember({"classical", "digraph", "relaxed", "custom"}));
  sub->add_option("--edges", f.edges, "edge list such as \"1>2,2>3,3>1\"");
  sub->add_option("--distance", f.distance, "placement distance C");
  sub->add_option("--n", f.n, "number of discs")->check(CLI::Range(0, kMaxDiscs));
  if (with_pegs) {
    sub->add_option("--from", f.from, "source peg")->check(CLI::Range(1, 3));
    sub->add_option("--to", f.to, "target peg")->check(CLI::Range(1, 3));
  }
  sub->add_option("--format", f.format, "plain | csv | json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  sub->add_option("--max-states", f.max_states, "state budget for exhaustive search")
      ->check(CLI::PositiveNumber);
}

Model resolve_model(const CommonFlags& f) {
  const bool needs_edges = f.model == "digraph" || f.model == "custom";
  const bool needs_distance = f.model == "relaxed" || f.model == "custom";
  if (needs_edges && !f.edges) throw UsageError("--model " + f.model + " requires --edges");
  if (!needs_edges && f.edges) throw UsageError("--edges is only valid with digraph or custom");
  if (needs_distance && !f.distance) throw UsageError("--model " + f.model + " requires --distance");
  if (!needs_distance && f.distance) {
    throw UsageError("--distance is only valid with relaxed or custom");
  }
  if (f.distance && *f.distance < 0) throw UsageError("--distance must be >= 0");

  Model m;
  if (f.edges) {
    try {
      m.graph = MoveGraph::parse(*f.edges);
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
    if (!m.graph.strongly_connected()) {
      throw UsageError("graph '" + m.graph.to_string() + "' is not strongly connected");
    }
  }
  if (f.distance) m.distance = *f.distance;
  if (f.model == "relaxed" && m.distance < 1) throw UsageError("relaxed model needs --distance >= 1");
  return m;
}

// ---------------------------------------------------------------- solve

enum class Goal { kStandard, kAllOnPeg };

int cmd_solve(const CommonFlags& f, const std::string& method_flag, std::ostream& out,
              std::ostream& err) {
  const Model m = resolve_model(f);
  if (f.from == f.to) throw UsageError("--from and --to must differ");
  const Peg src(f.from);
  const Peg tgt(f.to);

  std::string method = method_flag;
  if (method == "auto") {
    if (f.model == "classical") {
      method = "classical";
    } else if (m.distance == 0) {
      method = "directed";
    } else if (m.graph.is_complete()) {
      method = "a";
    } else {
      method = "bfs";
    }
  }
  const bool relaxed_method = method == "zeta" || method == "a" || method == "q";
  if (method == "classical" && (m.distance != 0 || !m.graph.is_complete())) {
    throw UsageError("--method classical needs the classical model");
  }
  if (method == "directed" && m.distance != 0) throw UsageError("--method directed needs distance 0");
  if (relaxed_method && (m.distance < 1 || !m.graph.is_complete())) {
    throw UsageError("--method " + method + " needs the complete graph and distance >= 1");
  }
  if (method == "a" && f.n == 0) throw UsageError("--method a needs --n >= 1");

  MoveSequence seq;
  Goal goal = Goal::kStandard;
  if (method == "classical") {
    seq = classical_solve(f.n, src, tgt);
  } else if (method == "directed") {
    seq = directed_move(m.graph, f.n, src, tgt);
  } else if (method == "zeta") {
    seq = zeta(f.n, m.distance, src, tgt);
    goal = Goal::kAllOnPeg;
  } else if (method == "a") {
    seq = a_symmetric(f.n, m.distance, src, tgt);
  } else if (method == "q") {
    seq = q_sequence(f.n, m.distance, src, tgt);
  } else {
    SearchOptions opts;
    opts.max_states = f.max_states;
    auto res = bfs_distance(m, standard_state(f.n, src), GoalPredicate::standard_on(tgt), opts);
    if (!res.witness) {
      err << "no solution: target unreachable\n";
      return kExitFailure;
    }
    seq = std::move(*res.witness);
  }

  // Never print a sequence that does not replay.
  const State start = standard_state(f.n, src);
  const auto report = validate(m, start, seq);
  const bool reached = report.ok && (goal == Goal::kStandard
                                         ? *report.final_state == standard_state(f.n, tgt)
                                         : GoalPredicate::all_on(tgt).matches(*report.final_state));
  if (!reached) {
    err << "internal error: generated sequence failed validation\n";
    return kExitFailure;
  }

  switch (parse_output_format(f.format)) {
    case OutputFormat::kPlain:
      write_moves_plain(out, seq);
      out << "# length " << seq.size() << '\n';
      break;
    case OutputFormat::kCsv:
      out << "step,from,to\n";
      for (std::size_t i = 0; i < seq.size(); ++i) {
        out << i + 1 << ',' << seq[i].from.value() << ',' << seq[i].to.value() << '\n';
      }
      break;
    case OutputFormat::kJson: {
      nlohmann::ordered_json j;
      j["edges"] = m.graph.to_string();
      j["distance"] = m.distance;
      j["n"] = f.n;
      j["from"] = f.from;
      j["to"] = f.to;
      j["method"] = method;
      j["length"] = seq.size();
      j["moves"] = nlohmann::json::parse(moves_to_json(seq));
      out << j.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- table

int cmd_table(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const Model m = resolve_model(f);
  const auto format = parse_output_format(f.format);

  if (m.distance > 0) {
    if (!m.graph.is_complete()) throw UsageError("table with distance >= 1 needs the complete graph");
    const auto values = conjecture_values(f.n, m.distance);
    if (format == OutputFormat::kJson) {
      nlohmann::ordered_json j;
      j["distance"] = m.distance;
      j["rows"] = nlohmann::ordered_json::array();
      for (int n = 0; n <= f.n; ++n) {
        j["rows"].push_back({{"n", n}, {"a", values.a[n].str()}, {"b", values.b[n].str()}});
      }
      out << j.dump() << '\n';
    } else {
      out << (format == OutputFormat::kCsv ? "n,a,b\n" : "n a b\n");
      const char sep = format == OutputFormat::kCsv ? ',' : ' ';
      for (int n = 0; n <= f.n; ++n) out << n << sep << values.a[n] << sep << values.b[n] << '\n';
    }
    return kExitOk;
  }

  const CountTable table = eval_move_counts(m.graph, f.n);
  const auto family = classify(m.graph);
  // Per-row closed-form status: "match", "MISMATCH" or "none".
  std::vector<std::string> status;
  bool all_match = true;
  for (int n = 0; n <= f.n; ++n) {
    std::string s = "match";
    for (int slot = 0; slot < MoveGraph::kEdgeSlots; ++slot) {
      const auto cf = closed_form_count(m.graph, edge_at_slot(slot), n);
      if (!cf) {
        s = "none";
        break;
      }
      if (*cf != table.column(slot)[n]) s = "MISMATCH";
    }
    if (s == "MISMATCH") all_match = false;
    status.push_back(s);
  }

  switch (format) {
    case OutputFormat::kCsv:
      write_count_table_csv(out, table);
      err << "closed form (" << to_string(*family) << "): "
          << (status.front() == "none" ? "none" : (all_match ? "match" : "MISMATCH")) << '\n';
      break;
    case OutputFormat::kJson: {
      auto j = nlohmann::ordered_json::parse(count_table_to_json(table));
      j["family"] = std::string(to_string(*family));
      for (int n = 0; n <= f.n; ++n) j["rows"][n]["closed_form"] = status[n];
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kPlain: {
      out << "# graph " << m.graph.to_string() << " (" << to_string(*family) << ")\n";
      std::vector<std::string> cells;
      std::size_t width = 3;
      for (int n = 0; n <= f.n; ++n)
        for (int slot = 0; slot < MoveGraph::kEdgeSlots; ++slot)
          width = std::max(width, table.column(slot)[n].str().size());
      out << std::setw(3) << "n";
      for (auto name : {"N12", "N21", "N13", "N31", "N23", "N32"}) {
        out << ' ' << std::setw(static_cast<int>(width)) << name;
      }
      out << "  closed_form\n";
      for (int n = 0; n <= f.n; ++n) {
        out << std::setw(3) << n;
        for (int slot = 0; slot < MoveGraph::kEdgeSlots; ++slot) {
          out << ' ' << std::setw(static_cast<int>(width)) << table.column(slot)[n].str();
        }
        out << "  " << status[n] << '\n';
      }
      if (family == GraphFamily::kFiveEdge) {
        out << "# " << growth_rate_5edge(1e-9).summary << '\n';
      }
      break;
    }
  }
  return all_match ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- verify

struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<CheckLine> suite_graphs(int n_max, const SearchOptions& opts) {
  std::vector<CheckLine> lines;
  std::size_t compared = 0;
  std::vector<std::string> bad;
  for (const auto& g : all_strongly_connected_graphs()) {
    for (int n = 0; n <= n_max; ++n) {
      const auto report = verify_optimality(g, n, opts);
      compared += report.rows.size();
      for (auto& msg : report.mismatches()) bad.push_back(std::move(msg));
    }
  }
  lines.push_back({"digraph-optimality", bad.empty(),
                   std::to_string(compared) + " pair comparisons" +
                       (bad.empty() ? "" : "; first mismatch: " + bad.front())});

  std::size_t cf_checked = 0;
  std::vector<std::string> cf_bad;
  for (const auto& g : all_strongly_connected_graphs()) {
    const auto table = eval_move_counts(g, 30);
    for (int n = 0; n <= 30; ++n) {
      for (int slot = 0; slot < MoveGraph::kEdgeSlots; ++slot) {
        const auto cf = closed_form_count(g, edge_at_slot(slot), n);
        if (!cf) continue;
        ++cf_checked;
        if (*cf != table.column(slot)[n]) {
          cf_bad.push_back(g.to_string() + " " + to_string(edge_at_slot(slot)) +
                           " n=" + std::to_string(n));
        }
      }
    }
  }
  lines.push_back({"closed-forms", cf_bad.empty(),
                   std::to_string(cf_checked) + " values" +
                       (cf_bad.empty() ? "" : "; first mismatch: " + cf_bad.front())});

  const auto growth = growth_rate_5edge(1e-6);
  const bool growth_ok = growth.error_vs_reciprocal < 1e-3 && growth.governed_by_reciprocal;
  lines.push_back({"five-edge-growth", growth_ok, growth.summary});
  return lines;
}

std::vector<HarnessReport> run_harnesses(const std::vector<std::pair<std::string, HarnessParams>>& list) {
  std::vector<HarnessReport> out;
  for (const auto& [name, params] : list) out.push_back(claim_harness(name, params));
  return out;
}

int cmd_verify(const CommonFlags& f, const std::string& suite, bool n_given, std::ostream& out) {
  SearchOptions opts;
  opts.max_states = f.max_states;
  const auto format = parse_output_format(f.format);

  std::vector<CheckLine> lines;
  std::vector<HarnessReport> reports;
  if (suite == "graphs") {
    lines = suite_graphs(n_given ? f.n : 6, opts);
  } else if (suite == "relaxed") {
    HarnessParams ab;
    ab.distance = 1;
    ab.n_max = n_given ? f.n : 8;
    ab.search = opts;
    HarnessParams sym = ab;
    sym.n_max = n_given ? f.n : 7;
    reports = run_harnesses({{"eq3-vs-oracle", ab}, {"symmetric-odd", sym}, {"symmetric-equals-a", sym}});
  } else if (suite == "claims") {
    HarnessParams seq;
    seq.n_max = n_given ? f.n : 60;
    seq.search = opts;
    HarnessParams proj;
    proj.n_max = 6;
    proj.samples = 100;
    proj.search = opts;
    reports = run_harnesses({{"dn-negative", seq}, {"claim51-inequality", seq}, {"projection", proj}});
  } else {
    throw UsageError("unknown suite '" + suite + "' (graphs, relaxed, claims)");
  }
  for (const auto& r : reports) {
    std::string detail = std::to_string(r.checks) + " checks";
    if (!r.counterexamples.empty()) {
      detail += "; n=" + std::to_string(r.counterexamples.front().n) + ": " +
                r.counterexamples.front().detail;
    }
    lines.push_back({r.suite, r.pass, detail});
  }

  bool all_pass = true;
  for (const auto& l : lines) all_pass = all_pass && l.pass;

  if (format == OutputFormat::kJson) {
    if (!reports.empty()) {
      out << '[';
      for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "," : "") << to_json(reports[i]);
      out << "]\n";
    } else {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& l : lines) j.push_back({{"check", l.name}, {"pass", l.pass}, {"detail", l.detail}});
      out << j.dump() << '\n';
    }
  } else if (format == OutputFormat::kCsv) {
    out << "check,pass,detail\n";
    for (const auto& l : lines) out << l.name << ',' << (l.pass ? "PASS" : "FAIL") << ",\"" << l.detail << "\"\n";
  } else {
    for (const auto& l : lines) out << (l.pass ? "PASS " : "FAIL ") << l.name << ": " << l.detail << '\n';
  }
  return all_pass ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- conjecture

int cmd_conjecture(const CommonFlags& f, int n_max, std::ostream& out, std::ostream& err) {
  if (!f.distance) throw UsageError("conjecture requires --distance");
  if (*f.distance < 1) throw UsageError("conjecture needs --distance >= 1");
  if (n_max < 1) throw UsageError("--n-max must be >= 1");
  SearchOptions opts;
  opts.max_states = f.max_states;
  const auto report = conjecture_probe(*f.distance, n_max, opts);
  if (f.format == "json") {
    out << conjecture_to_json(report) << '\n';
  } else {
    write_conjecture_csv(out, report);
  }
  for (const auto& p : report.problems) err << "inconsistent: " << p << '\n';
  return report.consistent() ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- graphs

int cmd_graphs(const std::string& action, const std::string& format_flag, std::ostream& out) {
  if (action != "enumerate") throw UsageError("unknown graphs action '" + action + "' (enumerate)");
  const auto classes = enumerate_graphs();
  const auto format = parse_output_format(format_flag);
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& c : classes) {
      nlohmann::ordered_json members = nlohmann::ordered_json::array();
      for (const auto& g : c.members) members.push_back(g.to_string());
      j.push_back({{"family", std::string(to_string(c.family))},
                   {"representative", c.representative.to_string()},
                   {"size", c.members.size()},
                   {"members", members}});
    }
    out << j.dump() << '\n';
  } else if (format == OutputFormat::kCsv) {
    out << "family,size,representative\n";
    for (const auto& c : classes) {
      out << to_string(c.family) << ',' << c.members.size() << ",\"" << c.representative.to_string() << "\"\n";
    }
  } else {
    std::size_t total = 0;
    for (const auto& c : classes) {
      total += c.members.size();
      out << std::left << std::setw(10) << to_string(c.family) << " size " << c.members.size()
          << "  representative " << c.representative.to_string() << '\n';
    }
    out << classes.size() << " classes, " << total << " labelled strongly connected graphs\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tower of Hanoi variants: solvers, count tables and exhaustive search"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  std::string method = "auto";
  auto* solve = app.add_subcommand("solve", "print a move sequence and its length");
  add_common(solve, solve_flags, true);
  solve->add_option("--method", method, "auto | classical | directed | zeta | a | q | bfs")
      ->check(CLI::IsMember({"auto", "classical", "directed", "zeta", "a", "q", "bfs"}));

  CommonFlags table_flags;
  auto* table = app.add_subcommand("table", "print move counts N(i,j,n) for n = 0..--n");
  add_common(table, table_flags, false);

  CommonFlags verify_flags;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, verify_flags, false);
  verify->add_option("--suite", suite, "graphs | relaxed | claims")->required();

  CommonFlags conj_flags;
  conj_flags.format = "csv";
  int n_max = 7;
  auto* conjecture = app.add_subcommand("conjecture", "exhaustive probe of the distance-C recurrence");
  add_common(conjecture, conj_flags, false);
  conjecture->add_option("--n-max", n_max, "largest disc count");

  std::string graphs_action;
  std::string graphs_format = "plain";
  auto* graphs = app.add_subcommand("graphs", "strongly connected move graphs");
  graphs->add_option("action", graphs_action, "enumerate")->required();
  graphs->add_option("--format", graphs_format)->check(CLI::IsMember({"plain", "csv", "json"}));

  std::vector<const char*> argv{"hanoi"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_flags, method, out, err);
    if (table->parsed()) return cmd_table(table_flags, out, err);
    if (verify->parsed()) return cmd_verify(verify_flags, suite, verify->count("--n") > 0, out);
    if (conjecture->parsed()) {
      if (conj_flags.model != "classical" && conj_flags.model != "relaxed") {
        throw UsageError("conjecture always uses the relaxed model");
      }
      return cmd_conjecture(conj_flags, n_max, out, err);
    }
    if (graphs->parsed()) return cmd_graphs(graphs_action, graphs_format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitExceeded& e) {
    err << e.what() << '\n';
    return kExitFailure;
  } catch (const InvalidInput& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hanoi::cli
