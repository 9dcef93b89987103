#include "hanoi/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hanoi {

namespace {

constexpr std::array<std::array<int, 2>, MoveGraph::kEdgeSlots> kSlotPairs{{
    {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}};

Peg parse_peg(std::string_view token, std::string_view whole) {
  if (token.size() != 1 || token[0] < '1' || token[0] > '3') {
    throw InvalidInput("bad peg '" + std::string(token) + "' in edge list '" +
                       std::string(whole) + "'");
  }
  return Peg(token[0] - '0');
}

}  // namespace

std::string to_string(const Move& mv) {
  return std::to_string(mv.from.value()) + ">" + std::to_string(mv.to.value());
}

int edge_slot(Peg from, Peg to) {
  for (int slot = 0; slot < MoveGraph::kEdgeSlots; ++slot) {
    if (kSlotPairs[slot][0] == from.value() && kSlotPairs[slot][1] == to.value()) return slot;
  }
  throw InvalidInput("edge_slot needs distinct pegs");
}

Move edge_at_slot(int slot) {
  if (slot < 0 || slot >= MoveGraph::kEdgeSlots) throw InvalidInput("edge slot out of range");
  return Move(kSlotPairs[slot][0], kSlotPairs[slot][1]);
}

MoveGraph MoveGraph::complete() { return from_mask(0x3F); }

MoveGraph MoveGraph::from_mask(std::uint8_t mask) {
  if (mask > 0x3F) throw InvalidInput("edge mask has bits beyond the 6 edge slots");
  MoveGraph g;
  g.mask_ = mask;
  return g;
}

MoveGraph MoveGraph::from_edges(const std::vector<Move>& edges) {
  MoveGraph g;
  for (const auto& e : edges) {
    if (g.contains(e)) throw InvalidInput("duplicate edge " + hanoi::to_string(e));
    g = g.with(e.from, e.to);
  }
  return g;
}

MoveGraph MoveGraph::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::vector<Move> edges;
  if (compact.empty()) return {};

  std::string_view rest = compact;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto gt = item.find('>');
    if (gt == std::string_view::npos) {
      throw InvalidInput("edge '" + std::string(item) + "' is not of the form i>j");
    }
    Peg from = parse_peg(item.substr(0, gt), text);
    Peg to = parse_peg(item.substr(gt + 1), text);
    if (from == to) throw InvalidInput("self loop " + std::string(item) + " in edge list");
    edges.emplace_back(from, to);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return from_edges(edges);
}

bool MoveGraph::contains(Peg from, Peg to) const {
  if (from == to) return false;
  return (mask_ >> edge_slot(from, to)) & 1U;
}

MoveGraph MoveGraph::with(Peg from, Peg to) const {
  return from_mask(static_cast<std::uint8_t>(mask_ | (1U << edge_slot(from, to))));
}

MoveGraph MoveGraph::without(Peg from, Peg to) const {
  return from_mask(static_cast<std::uint8_t>(mask_ & ~(1U << edge_slot(from, to))));
}

int MoveGraph::edge_count() const {
  int count = 0;
  for (int slot = 0; slot < kEdgeSlots; ++slot) count += (mask_ >> slot) & 1;
  return count;
}

std::vector<Move> MoveGraph::edges() const {
  std::vector<Move> out;
  for (int slot = 0; slot < kEdgeSlots; ++slot) {
    if ((mask_ >> slot) & 1U) out.push_back(edge_at_slot(slot));
  }
  return out;
}

bool MoveGraph::strongly_connected() const {
  // Three nodes: every peg must reach every other one.
  std::array<std::array<bool, kPegCount>, kPegCount> reach{};
  for (int i = 0; i < kPegCount; ++i) {
    reach[i][i] = true;
    for (int j = 0; j < kPegCount; ++j) {
      if (i != j && contains(Peg::from_index(i), Peg::from_index(j))) reach[i][j] = true;
    }
  }
  for (int k = 0; k < kPegCount; ++k)
    for (int i = 0; i < kPegCount; ++i)
      for (int j = 0; j < kPegCount; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
  for (const auto& row : reach)
    for (bool r : row)
      if (!r) return false;
  return true;
}

std::string MoveGraph::to_string() const {
  std::string out;
  for (const auto& e : edges()) {
    if (!out.empty()) out += ',';
    out += hanoi::to_string(e);
  }
  return out;
}

MoveGraph MoveGraph::relabeled(const std::array<Peg, kPegCount>& relabel) const {
  MoveGraph g;
  for (const auto& e : edges()) {
    g = g.with(relabel[e.from.index()], relabel[e.to.index()]);
  }
  return g;
}

Model Model::relaxed(int c) {
  if (c < 0) throw InvalidInput("distance must be >= 0");
  return {MoveGraph::complete(), c, DistanceRule::kPairwise};
}

State State::from_stacks(std::array<Stack, kPegCount> stacks) {
  std::size_t total = 0;
  for (const auto& st : stacks) total += st.size();
  if (total > static_cast<std::size_t>(kMaxDiscs)) throw MalformedState("too many discs");

  std::vector<bool> seen(total + 1, false);
  for (const auto& st : stacks) {
    for (Disc d : st) {
      if (d == 0 || d > total) {
        throw MalformedState("disc " + std::to_string(d) + " outside 1.." + std::to_string(total));
      }
      if (seen[d]) throw MalformedState("disc " + std::to_string(d) + " appears twice");
      seen[d] = true;
    }
  }
  State s;
  s.stacks_ = std::move(stacks);
  s.disc_count_ = static_cast<int>(total);
  return s;
}

std::optional<Disc> State::top(Peg p) const {
  const auto& st = stacks_[p.index()];
  if (st.empty()) return std::nullopt;
  return st.back();
}

Peg State::peg_of(Disc d) const {
  for (int i = 0; i < kPegCount; ++i) {
    if (std::find(stacks_[i].begin(), stacks_[i].end(), d) != stacks_[i].end()) {
      return Peg::from_index(i);
    }
  }
  throw InvalidInput("disc " + std::to_string(d) + " is not in this state");
}

std::string State::key() const {
  std::string out;
  for (int i = 0; i < kPegCount; ++i) {
    if (i > 0) out += '|';
    for (std::size_t k = 0; k < stacks_[i].size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(stacks_[i][k]);
    }
  }
  return out;
}

State State::moved(Peg from, Peg to) const {
  State next = *this;
  auto& src = next.stacks_[from.index()];
  if (src.empty()) throw IllegalMove(Violation::kEmptySource, Move(from, to), 0);
  next.stacks_[to.index()].push_back(src.back());
  src.pop_back();
  return next;
}

State State::without_largest() const {
  State next = *this;
  if (disc_count_ == 0) return next;
  const auto largest = static_cast<Disc>(disc_count_);
  for (auto& st : next.stacks_) {
    st.erase(std::remove(st.begin(), st.end(), largest), st.end());
  }
  next.disc_count_ = disc_count_ - 1;
  return next;
}

State standard_state(int n, Peg peg) {
  if (n < 0 || n > kMaxDiscs) throw InvalidInput("disc count out of range");
  std::array<State::Stack, kPegCount> stacks{};
  auto& st = stacks[peg.index()];
  for (int d = n; d >= 1; --d) st.push_back(static_cast<Disc>(d));
  return State::from_stacks(std::move(stacks));
}

bool stack_within_distance(const State::Stack& stack, int distance, DistanceRule rule) {
  if (stack.size() < 2) return true;
  if (rule == DistanceRule::kAdjacent) {
    for (std::size_t i = 1; i < stack.size(); ++i) {
      if (static_cast<int>(stack[i]) - static_cast<int>(stack[i - 1]) > distance) return false;
    }
    return true;
  }
  // Pairwise: each disc against the smallest disc anywhere below it.
  int lowest_below = stack[0];
  for (std::size_t i = 1; i < stack.size(); ++i) {
    if (static_cast<int>(stack[i]) - lowest_below > distance) return false;
    lowest_below = std::min<int>(lowest_below, stack[i]);
  }
  return true;
}

bool is_legal_state(const Model& m, const State& s) {
  for (const auto& st : s.stacks()) {
    if (!stack_within_distance(st, m.distance, m.rule)) return false;
  }
  return true;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::kNone: return "none";
    case Violation::kEmptySource: return "empty source";
    case Violation::kMissingEdge: return "missing edge";
    case Violation::kDistance: return "distance violation";
  }
  return "unknown";
}

IllegalMove::IllegalMove(Violation rule, Move mv, std::size_t index)
    : std::runtime_error("illegal move " + to_string(mv) +
                         (index > 0 ? " at index " + std::to_string(index) : std::string()) +
                         ": " + std::string(hanoi::to_string(rule))),
      rule_(rule),
      move_(mv),
      index_(index) {}

Violation check_move(const Model& m, const State& s, const Move& mv) {
  const auto disc = s.top(mv.from);
  if (!disc) return Violation::kEmptySource;
  if (!m.graph.contains(mv)) return Violation::kMissingEdge;

  const auto& target = s.stack(mv.to);
  if (target.empty()) return Violation::kNone;
  int reference = target.back();
  if (m.rule == DistanceRule::kPairwise) {
    reference = *std::min_element(target.begin(), target.end());
  }
  if (static_cast<int>(*disc) - reference > m.distance) return Violation::kDistance;
  return Violation::kNone;
}

std::vector<Move> legal_moves(const Model& m, const State& s) {
  std::vector<Move> out;
  for (int f = 1; f <= kPegCount; ++f) {
    for (int t = 1; t <= kPegCount; ++t) {
      if (f == t) continue;
      Move mv(f, t);
      if (check_move(m, s, mv) == Violation::kNone) out.push_back(mv);
    }
  }
  return out;
}

State apply(const Model& m, const State& s, const Move& mv) {
  if (auto v = check_move(m, s, mv); v != Violation::kNone) throw IllegalMove(v, mv, 0);
  return s.moved(mv.from, mv.to);
}

State apply_all(const Model& m, State s, const MoveSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (auto v = check_move(m, s, seq[i]); v != Violation::kNone) {
      throw IllegalMove(v, seq[i], i + 1);
    }
    s = s.moved(seq[i].from, seq[i].to);
  }
  return s;
}

namespace {

Peg swap_pegs(Peg p, Peg src, Peg tgt) {
  if (p == src) return tgt;
  if (p == tgt) return src;
  return p;
}

}  // namespace

State mirror_state(const State& s, Peg src, Peg tgt) {
  if (src == tgt) throw InvalidInput("mirror needs distinct source and target");
  auto stacks = s.stacks();
  std::swap(stacks[src.index()], stacks[tgt.index()]);
  return State::from_stacks(std::move(stacks));
}

Move mirror_move(const Move& mv, Peg src, Peg tgt) {
  if (src == tgt) throw InvalidInput("mirror needs distinct source and target");
  return Move(swap_pegs(mv.to, src, tgt), swap_pegs(mv.from, src, tgt));
}

MoveSequence mirror_reverse(const MoveSequence& seq, Peg src, Peg tgt) {
  MoveSequence out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(mirror_move(*it, src, tgt));
  return out;
}

bool mirror_invariant(const MoveGraph& g, Peg src, Peg tgt) {
  for (const auto& e : g.edges()) {
    if (!g.contains(mirror_move(e, src, tgt))) return false;
  }
  return true;
}

}  // namespace hanoi
