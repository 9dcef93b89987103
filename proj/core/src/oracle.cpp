#include "hanoi/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "hanoi/recurrence.hpp"
#include "hanoi/solvers.hpp"

namespace hanoi {

namespace {

constexpr int kMaxBase3Discs = 40;   // 3^40 < 2^64
constexpr int kMaxNibbleDiscs = 14;  // n + 2 symbols of 4 bits

/// Packs a state into 64 bits. With distance 0 every stack is sorted, so the
/// disc -> peg assignment (base 3) determines the state. Otherwise the stacks
/// are written out as 4-bit symbols with 0 as the peg separator.
class StateCodec {
 public:
  StateCodec(int n, int distance) : n_(n), sorted_(distance == 0) {
    const int limit = sorted_ ? kMaxBase3Discs : kMaxNibbleDiscs;
    if (n > limit) {
      throw InvalidInput("exhaustive search supports at most " + std::to_string(limit) +
                         " discs for this model, got " + std::to_string(n));
    }
  }

  std::uint64_t encode(const State& s) const {
    std::uint64_t code = 0;
    if (sorted_) {
      std::uint64_t weight = 1;
      std::array<int, kMaxBase3Discs + 1> peg{};
      for (int p = 0; p < kPegCount; ++p)
        for (Disc d : s.stacks()[p]) peg[d] = p;
      for (int d = 1; d <= n_; ++d) {
        code += weight * static_cast<std::uint64_t>(peg[d]);
        weight *= 3;
      }
      return code;
    }
    int shift = 0;
    for (int p = 0; p < kPegCount; ++p) {
      if (p > 0) shift += 4;  // separator symbol 0
      for (Disc d : s.stacks()[p]) {
        code |= static_cast<std::uint64_t>(d) << shift;
        shift += 4;
      }
    }
    return code;
  }

  State decode(std::uint64_t code) const {
    std::array<State::Stack, kPegCount> stacks{};
    if (sorted_) {
      std::array<int, kMaxBase3Discs + 1> peg{};
      for (int d = 1; d <= n_; ++d) {
        peg[d] = static_cast<int>(code % 3);
        code /= 3;
      }
      for (int d = n_; d >= 1; --d) stacks[peg[d]].push_back(static_cast<Disc>(d));
    } else {
      int p = 0;
      for (int i = 0; i < n_ + 2; ++i) {
        const auto sym = static_cast<Disc>((code >> (4 * i)) & 0xF);
        if (sym == 0) {
          ++p;
        } else {
          stacks[p].push_back(sym);
        }
      }
    }
    return State::from_stacks(std::move(stacks));
  }

 private:
  int n_;
  bool sorted_;
};

/// Level-by-level BFS that keeps every visited state with its depth.
class LayeredSearch {
 public:
  LayeredSearch(const Model& m, const State& start, const SearchOptions& opts)
      : model_(m), codec_(start.disc_count(), m.distance), cap_(opts.max_states) {
    if (!is_legal_state(m, start)) {
      throw InvalidInput("start state " + start.key() + " is illegal under the model");
    }
    const auto code = codec_.encode(start);
    depth_.emplace(code, 0);
    layers_.push_back({code});
  }

  std::size_t depth() const { return layers_.size() - 1; }
  const std::vector<std::uint64_t>& layer(std::size_t d) const { return layers_[d]; }
  std::size_t explored() const { return depth_.size(); }
  std::size_t peak_frontier() const { return peak_; }
  const StateCodec& codec() const { return codec_; }
  const Model& model() const { return model_; }

  /// Adds the next layer. Returns false when no new state was found.
  bool expand() {
    std::vector<std::uint64_t> next;
    const auto d = static_cast<std::uint32_t>(layers_.size());
    for (std::uint64_t code : layers_.back()) {
      const State s = codec_.decode(code);
      for (const Move& mv : legal_moves(model_, s)) {
        const auto c = codec_.encode(s.moved(mv.from, mv.to));
        if (depth_.emplace(c, d).second) {
          next.push_back(c);
          if (depth_.size() > cap_) throw ResourceLimitExceeded(cap_);
        }
      }
    }
    if (next.empty()) return false;
    peak_ = std::max(peak_, next.size());
    layers_.push_back(std::move(next));
    return true;
  }

  void expand_all() {
    while (expand()) {
    }
  }

  std::optional<std::uint32_t> depth_of(const State& s) const {
    auto it = depth_.find(codec_.encode(s));
    if (it == depth_.end()) return std::nullopt;
    return it->second;
  }

  /// Lexicographically smallest optimal path from the start to any of
  /// `targets`, all of which sit on layer `goal_depth`.
  MoveSequence witness(const std::vector<std::uint64_t>& targets, std::size_t goal_depth) const {
    // on_path[d]: states at depth d that reach a target in goal_depth - d moves.
    std::vector<std::unordered_set<std::uint64_t>> on_path(goal_depth + 1);
    on_path[goal_depth].insert(targets.begin(), targets.end());
    const auto edges = model_.graph.edges();
    for (std::size_t d = goal_depth; d > 0; --d) {
      for (std::uint64_t code : on_path[d]) {
        const State s = codec_.decode(code);
        for (const Move& e : edges) {
          // Undo a move e: the disc now on top of e.to came from e.from.
          if (s.empty(e.to)) continue;
          const State prev = s.moved(e.to, e.from);
          if (!stack_within_distance(prev.stack(e.from), model_.distance, model_.rule)) continue;
          const auto pc = codec_.encode(prev);
          auto it = depth_.find(pc);
          if (it != depth_.end() && it->second == d - 1) on_path[d - 1].insert(pc);
        }
      }
    }

    MoveSequence path;
    State cur = codec_.decode(layers_[0][0]);
    for (std::size_t d = 0; d < goal_depth; ++d) {
      bool advanced = false;
      for (const Move& mv : legal_moves(model_, cur)) {
        State next = cur.moved(mv.from, mv.to);
        if (on_path[d + 1].count(codec_.encode(next))) {
          path.push_back(mv);
          cur = std::move(next);
          advanced = true;
          break;
        }
      }
      if (!advanced) throw std::logic_error("witness reconstruction lost the optimal path");
    }
    return path;
  }

 private:
  Model model_;
  StateCodec codec_;
  std::size_t cap_;
  std::unordered_map<std::uint64_t, std::uint32_t> depth_;
  std::vector<std::vector<std::uint64_t>> layers_;
  std::size_t peak_ = 1;
};

std::uint64_t length_of(const MoveSequence& seq) { return seq.size(); }

}  // namespace

bool GoalPredicate::matches(const State& s) const {
  switch (kind_) {
    case Kind::kStandardOn:
      return s == standard_state(s.disc_count(), peg_);
    case Kind::kAllOn:
      return static_cast<int>(s.stack(peg_).size()) == s.disc_count();
    case Kind::kExact:
      return s == state_;
  }
  return false;
}

SearchResult bfs_distance(const Model& m, const State& start, const GoalPredicate& goal,
                          const SearchOptions& opts) {
  LayeredSearch search(m, start, opts);
  SearchResult result;
  while (true) {
    const std::size_t d = search.depth();
    std::vector<std::uint64_t> hits;
    for (std::uint64_t code : search.layer(d)) {
      if (goal.matches(search.codec().decode(code))) hits.push_back(code);
    }
    if (!hits.empty()) {
      result.distance = d;
      if (opts.want_witness) result.witness = search.witness(hits, d);
      break;
    }
    if (!search.expand()) break;
  }
  result.explored = search.explored();
  result.peak_frontier = search.peak_frontier();
  return result;
}

std::size_t reachable_state_count(const Model& m, const State& start, const SearchOptions& opts) {
  LayeredSearch search(m, start, opts);
  search.expand_all();
  return search.explored();
}

bool OptimalityReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const OptimalityRow& r) { return r.ok(); });
}

std::vector<std::string> OptimalityReport::mismatches() const {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    if (r.ok()) continue;
    out.push_back("graph " + graph.to_string() + " pair " + to_string(r.pair) +
                  " n=" + std::to_string(n) +
                  ": bfs=" + (r.bfs ? std::to_string(*r.bfs) : std::string("unreachable")) +
                  " directed_move=" + std::to_string(r.constructive) +
                  (r.constructive_legal ? "" : " (illegal)") + " recurrence=" + r.recurrence.str());
  }
  return out;
}

OptimalityReport verify_optimality(const MoveGraph& g, int n, const SearchOptions& opts) {
  if (!g.strongly_connected()) {
    throw NotStronglyConnected("graph '" + g.to_string() + "' is not strongly connected");
  }
  const Model model = Model::digraph(g);
  const CountTable table = eval_move_counts(g, n);

  OptimalityReport report{g, n, {}};
  std::array<std::optional<LayeredSearch>, kPegCount> searches;
  for (int slot = 0; slot < MoveGraph::kEdgeSlots; ++slot) {
    const Move pair = edge_at_slot(slot);
    auto& search = searches[pair.from.index()];
    if (!search) {
      search.emplace(model, standard_state(n, pair.from), opts);
      search->expand_all();
    }
    OptimalityRow row;
    row.pair = pair;
    if (auto d = search->depth_of(standard_state(n, pair.to))) row.bfs = *d;
    const MoveSequence seq = directed_move(g, n, pair.from, pair.to);
    row.constructive = seq.size();
    try {
      row.constructive_legal = apply_all(model, standard_state(n, pair.from), seq) ==
                               standard_state(n, pair.to);
    } catch (const IllegalMove&) {
      row.constructive_legal = false;
    }
    row.recurrence = table.at(pair, n);
    report.rows.push_back(std::move(row));
  }
  return report;
}

SearchResult shortest_symmetric(const Model& m, int n, Peg src, Peg tgt,
                                const SearchOptions& opts) {
  if (src == tgt) throw InvalidInput("source and target peg must differ");
  if (!mirror_invariant(m.graph, src, tgt)) {
    throw InvalidInput("graph '" + m.graph.to_string() +
                       "' is not closed under the source/target mirror");
  }
  LayeredSearch search(m, standard_state(n, src), opts);
  SearchResult result;
  while (true) {
    const std::size_t d = search.depth();
    const auto& layer = search.layer(d);

    std::optional<std::uint64_t> even_hit;
    for (std::uint64_t code : layer) {
      const State w = search.codec().decode(code);
      if (search.codec().encode(mirror_state(w, src, tgt)) == code) {
        even_hit = code;
        break;
      }
    }
    if (even_hit) {
      result.distance = 2 * d;
      if (opts.want_witness) {
        MoveSequence half = search.witness({*even_hit}, d);
        MoveSequence tail = mirror_reverse(half, src, tgt);
        half.insert(half.end(), tail.begin(), tail.end());
        result.witness = std::move(half);
      }
      break;
    }

    std::optional<std::pair<std::uint64_t, Move>> odd_hit;
    for (std::uint64_t code : layer) {
      const State w = search.codec().decode(code);
      const State mirrored = mirror_state(w, src, tgt);
      for (const Move& mv : legal_moves(m, w)) {
        if (w.moved(mv.from, mv.to) == mirrored) {
          odd_hit.emplace(code, mv);
          break;
        }
      }
      if (odd_hit) break;
    }
    if (odd_hit) {
      result.distance = 2 * d + 1;
      if (opts.want_witness) {
        MoveSequence half = search.witness({odd_hit->first}, d);
        MoveSequence tail = mirror_reverse(half, src, tgt);
        half.push_back(odd_hit->second);
        half.insert(half.end(), tail.begin(), tail.end());
        result.witness = std::move(half);
      }
      break;
    }
    if (!search.expand()) break;
  }
  result.explored = search.explored();
  result.peak_frontier = search.peak_frontier();
  return result;
}

ConjectureReport conjecture_probe(int distance, int n_max, const SearchOptions& opts) {
  if (distance < 1) throw InvalidInput("conjecture probe needs distance >= 1");
  if (n_max < 1) throw InvalidInput("conjecture probe needs n_max >= 1");
  const Model model = Model::relaxed(distance);
  const Peg src(1);
  const Peg tgt(2);
  const auto values = conjecture_values(n_max, distance);

  SearchOptions quiet = opts;
  quiet.want_witness = false;

  ConjectureReport report;
  report.distance = distance;
  for (int n = 1; n <= n_max; ++n) {
    ConjectureRow row;
    row.n = n;
    const State start = standard_state(n, src);
    const auto to_std = bfs_distance(model, start, GoalPredicate::standard_on(tgt), quiet);
    const auto to_any = bfs_distance(model, start, GoalPredicate::all_on(tgt), quiet);
    if (!to_std.distance || !to_any.distance) {
      report.problems.push_back("n=" + std::to_string(n) + ": goal unreachable");
      continue;
    }
    row.bfs_std = *to_std.distance;
    row.bfs_any = *to_any.distance;
    row.a_conj = values.a[n];
    row.b_conj = values.b[n];

    const MoveSequence a_seq = a_symmetric(n, distance, src, tgt);
    const MoveSequence q_seq = q_sequence(n, distance, src, tgt);
    row.len_a_sym = a_seq.size();
    row.len_q = q_seq.size();

    for (const auto* seq : {&a_seq, &q_seq}) {
      const char* name = seq == &a_seq ? "a_symmetric" : "q_sequence";
      try {
        if (apply_all(model, start, *seq) != standard_state(n, tgt)) {
          report.problems.push_back("n=" + std::to_string(n) + ": " + name +
                                    " does not end in the standard state");
        }
      } catch (const IllegalMove& e) {
        report.problems.push_back("n=" + std::to_string(n) + ": " + name + " " + e.what());
      }
    }
    if (row.bfs_std > length_of(a_seq) || row.bfs_std > length_of(q_seq)) {
      report.problems.push_back("n=" + std::to_string(n) +
                                ": BFS distance exceeds a constructive length");
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace hanoi
