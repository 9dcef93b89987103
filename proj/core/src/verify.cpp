#include "hanoi/verify.hpp"

#include <random>

#include <json.hpp>

#include "hanoi/recurrence.hpp"
#include "hanoi/solvers.hpp"

namespace hanoi {

namespace {

/// Disc moved at each step; nullopt at the first illegal move.
std::optional<std::vector<Disc>> moved_discs(const Model& m, State s, const MoveSequence& seq) {
  std::vector<Disc> discs;
  discs.reserve(seq.size());
  for (const Move& mv : seq) {
    if (check_move(m, s, mv) != Violation::kNone) return std::nullopt;
    discs.push_back(*s.top(mv.from));
    s = s.moved(mv.from, mv.to);
  }
  return discs;
}

std::vector<Disc> moved_discs_or_throw(const Model& m, const State& start, const MoveSequence& seq) {
  auto discs = moved_discs(m, start, seq);
  if (!discs) {
    apply_all(m, start, seq);  // throws with the offending index
    throw std::logic_error("replay disagreed with apply_all");
  }
  return *discs;
}

State random_walk(const Model& m, State s, int steps, std::mt19937_64& rng) {
  for (int i = 0; i < steps; ++i) {
    const auto moves = legal_moves(m, s);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const Move mv = moves[pick(rng)];
    s = s.moved(mv.from, mv.to);
  }
  return s;
}

void add_counterexample(HarnessReport& r, int n, std::string detail) {
  r.counterexamples.push_back({n, std::move(detail)});
}

void run_ab_vs_oracle(HarnessReport& r) {
  const auto& p = r.params;
  const Model model = Model::relaxed(p.distance);
  const auto values = conjecture_values(p.n_max, p.distance);
  SearchOptions opts = p.search;
  opts.want_witness = false;
  for (int n = 1; n <= p.n_max; ++n) {
    const State start = standard_state(n, Peg(1));
    const auto to_std = bfs_distance(model, start, GoalPredicate::standard_on(Peg(2)), opts);
    const auto to_any = bfs_distance(model, start, GoalPredicate::all_on(Peg(2)), opts);
    ++r.checks;
    if (!to_std.distance || BigInt(*to_std.distance) != values.a[n]) {
      add_counterexample(r, n, "bfs std->std " +
                                   (to_std.distance ? std::to_string(*to_std.distance) : "none") +
                                   " != a_n " + values.a[n].str());
    }
    ++r.checks;
    if (!to_any.distance || BigInt(*to_any.distance) != values.b[n]) {
      add_counterexample(r, n, "bfs std->all-on-peg " +
                                   (to_any.distance ? std::to_string(*to_any.distance) : "none") +
                                   " != b_n " + values.b[n].str());
    }
    if (p.distance == 1) {
      ++r.checks;
      const auto closed = ab_closed_form(n, AbSequence::kA);
      if (!closed.is_integer() || closed.to_integer() != values.a[n]) {
        add_counterexample(r, n, "closed form a_n " + closed.to_string() + " != " + values.a[n].str());
      }
    }
  }
}

void run_block_inequality(HarnessReport& r) {
  const auto& p = r.params;
  for (int k : p.block_sizes) {
    if (k < 2) throw InvalidInput("claim51 block sizes must be >= 2");
    const int c = k - 1;
    const auto values = conjecture_values(p.n_max, c);
    const auto x = q_sequence_lengths(p.n_max, c);
    const auto& y = values.a;  // y_n = 2 b_{n-1} + 1, y_0 = 0
    for (int n = k; n <= p.n_max; ++n) {
      ++r.checks;
      const BigInt lhs = x[n] - x[n - k];
      const BigInt rhs = y[n] - y[n - k];
      if (lhs < rhs) {
        add_counterexample(r, n, "k=" + std::to_string(k) + ": x_n-x_{n-k}=" + lhs.str() +
                                     " < y_n-y_{n-k}=" + rhs.str());
      }
    }
  }
}

void run_dn_negative(HarnessReport& r) {
  const auto& p = r.params;
  const auto b = conjecture_values(p.n_max, 1).b;
  auto d = [&](int n) -> BigInt { return 2 * b[n - 1] + 1 - (3 * b[n - 2] + 4); };
  for (int n = 2; n <= p.n_max; ++n) {
    ++r.checks;
    if (d(n) >= 0) {
      add_counterexample(r, n, "2b_{n-1}+1 >= 3b_{n-2}+4 (d_n=" + d(n).str() + ")");
    }
    if (n >= 4) {
      ++r.checks;
      if (d(n) != 2 * d(n - 2) + 1) {
        add_counterexample(r, n, "d_n=" + d(n).str() + " != 2d_{n-2}+1");
      }
    }
  }
}

void run_symmetric(HarnessReport& r, bool compare_with_a) {
  const auto& p = r.params;
  const Model model = Model::relaxed(p.distance);
  const auto values = conjecture_values(p.n_max, p.distance);
  const Peg src(1);
  const Peg tgt(2);
  for (int n = 1; n <= p.n_max; ++n) {
    const auto res = shortest_symmetric(model, n, src, tgt, p.search);
    ++r.checks;
    if (!res.distance) {
      add_counterexample(r, n, "no symmetric solution found");
      continue;
    }
    const auto len = *res.distance;
    if (compare_with_a) {
      if (BigInt(len) != values.a[n]) {
        add_counterexample(r, n, "shortest symmetric " + std::to_string(len) + " != a_n " +
                                     values.a[n].str());
      }
    } else if (len % 2 == 0) {
      add_counterexample(r, n, "shortest symmetric length " + std::to_string(len) + " is even");
    }
    if (res.witness) {
      ++r.checks;
      const auto v = validate(model, standard_state(n, src), *res.witness);
      if (!v.ok || *v.final_state != standard_state(n, tgt) ||
          !is_symmetric(*res.witness, src, tgt, model, standard_state(n, src))) {
        add_counterexample(r, n, "witness is not a legal symmetric transfer");
      }
    }
  }
}

void run_projection(HarnessReport& r) {
  const auto& p = r.params;
  std::mt19937_64 rng(0x5eed);
  const int max_n = std::max(2, std::min(p.n_max, 6));
  int produced = 0;
  int round = 0;
  while (produced < p.samples) {
    for (int c = 0; c <= 2 && produced < p.samples; ++c) {
      const Model model = Model::relaxed(c);
      for (int n = 2; n <= max_n && produced < p.samples; ++n) {
        const State start = random_walk(model, standard_state(n, Peg(1)), round * 7, rng);
        const State goal = random_walk(model, standard_state(n, Peg(2)), 3 + round * 5, rng);
        const auto res = bfs_distance(model, start, GoalPredicate::exact(goal), p.search);
        if (!res.witness) continue;
        ++produced;
        ++r.checks;
        const MoveSequence& alpha = *res.witness;
        const MoveSequence beta = project_out_largest(alpha, model, start);
        const std::size_t k = moves_of_largest(alpha, model, start);
        const auto v = validate(model, start.without_largest(), beta);
        if (!v.ok || *v.final_state != goal.without_largest() || alpha.size() != beta.size() + k) {
          add_counterexample(r, n, "projection failed for C=" + std::to_string(c) + " start " +
                                       start.key() + " goal " + goal.key());
        }
      }
    }
    ++round;
  }
}

}  // namespace

ValidationReport validate(const Model& m, const State& start, const MoveSequence& seq) {
  ValidationReport report;
  report.length = seq.size();
  State s = start;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (auto v = check_move(m, s, seq[i]); v != Violation::kNone) {
      report.first_bad_index = i + 1;
      report.violation = v;
      return report;
    }
    s = s.moved(seq[i].from, seq[i].to);
  }
  report.ok = true;
  report.final_state = std::move(s);
  return report;
}

bool is_symmetric(const MoveSequence& seq, Peg src, Peg tgt) {
  const std::size_t len = seq.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (seq[len - 1 - i] != mirror_move(seq[i], src, tgt)) return false;
  }
  return true;
}

bool is_symmetric(const MoveSequence& seq, Peg src, Peg tgt, const Model& m, const State& start) {
  if (!is_symmetric(seq, src, tgt)) return false;
  const auto discs = moved_discs(m, start, seq);
  if (!discs) return false;
  const std::size_t len = discs->size();
  for (std::size_t i = 0; i < len; ++i) {
    if ((*discs)[i] != (*discs)[len - 1 - i]) return false;
  }
  return true;
}

MoveSequence project_out_largest(const MoveSequence& seq, const Model& m, const State& start) {
  const auto discs = moved_discs_or_throw(m, start, seq);
  const auto largest = static_cast<Disc>(start.disc_count());
  MoveSequence out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (discs[i] != largest) out.push_back(seq[i]);
  }
  return out;
}

std::size_t moves_of_largest(const MoveSequence& seq, const Model& m, const State& start) {
  const auto discs = moved_discs_or_throw(m, start, seq);
  const auto largest = static_cast<Disc>(start.disc_count());
  return static_cast<std::size_t>(std::count(discs.begin(), discs.end(), largest));
}

LambdaFlags lambda_predicates(const State& s, int n, Peg initial, LambdaReading reading) {
  if (s.disc_count() != n) throw InvalidInput("state does not hold n discs");
  LambdaFlags flags;
  if (n < 2) return flags;
  const auto big = static_cast<Disc>(n);
  const auto second = static_cast<Disc>(n - 1);
  const bool strict = reading == LambdaReading::kStrict;
  const std::size_t smalls = static_cast<std::size_t>(n - 2);

  for (int i = 0; i < kPegCount; ++i) {
    const Peg other = Peg::from_index(i);
    if (other == initial) continue;
    const Peg third = third_peg(initial, other);
    const auto& init_stack = s.stack(initial);
    const auto& other_stack = s.stack(other);
    const auto& third_stack = s.stack(third);

    // lambda: n alone on initial, n-1 at the bottom of `other`.
    if (init_stack.size() == 1 && init_stack[0] == big && !other_stack.empty() &&
        other_stack[0] == second) {
      if (!strict || (other_stack.size() == 1 && third_stack.size() == smalls)) {
        flags.is_lambda = true;
      }
    }
    // lambda': initial empty, n directly on n-1 at the bottom of `other`.
    if (init_stack.empty() && other_stack.size() >= 2 && other_stack[0] == second &&
        other_stack[1] == big) {
      if (!strict || (other_stack.size() == 2 && third_stack.size() == smalls)) {
        flags.is_lambda_prime = true;
      }
    }
  }
  return flags;
}

std::vector<std::string_view> harness_suites() {
  return {"eq3-vs-oracle", "claim51-inequality", "dn-negative",
          "symmetric-odd", "symmetric-equals-a", "projection"};
}

HarnessReport claim_harness(std::string_view suite, const HarnessParams& params) {
  HarnessReport report;
  report.suite = std::string(suite);
  report.params = params;
  if (suite == "eq3-vs-oracle") {
    run_ab_vs_oracle(report);
  } else if (suite == "claim51-inequality") {
    run_block_inequality(report);
  } else if (suite == "dn-negative") {
    run_dn_negative(report);
  } else if (suite == "symmetric-odd") {
    run_symmetric(report, false);
  } else if (suite == "symmetric-equals-a") {
    run_symmetric(report, true);
  } else if (suite == "projection") {
    run_projection(report);
  } else {
    throw InvalidInput("unknown harness suite '" + std::string(suite) + "'");
  }
  report.pass = report.counterexamples.empty() && report.checks > 0;
  return report;
}

std::string to_json(const HarnessReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["params"] = {{"distance", report.params.distance},
                 {"n_max", report.params.n_max},
                 {"block_sizes", report.params.block_sizes},
                 {"samples", report.params.samples},
                 {"max_states", report.params.search.max_states}};
  j["pass"] = report.pass;
  j["checks"] = report.checks;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : report.counterexamples) {
    j["counterexamples"].push_back({{"n", c.n}, {"detail", c.detail}});
  }
  return j.dump();
}

}  // namespace hanoi
