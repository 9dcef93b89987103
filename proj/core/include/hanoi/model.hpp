#pragma once

// Pegs, discs, states and the legality rules shared by every puzzle variant.
//
// A model is a (move digraph, placement distance) pair. Distance 0 with the
// complete graph is the classical puzzle; distance 0 with a restricted graph is
// the digraph variant; distance C >= 1 lets a disc rest on a smaller one as long
// as it is at most C sizes larger.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hanoi {

using Disc = std::uint8_t;

inline constexpr int kPegCount = 3;
inline constexpr int kMaxDiscs = 255;

/// Structural problems with an input value: bad peg ids, malformed states,
/// unparsable edge lists, out-of-range parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state is structurally broken (a disc missing or present twice).
class MalformedState : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A solver or oracle was handed a graph that is not strongly connected.
class NotStronglyConnected : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Peg number in {1, 2, 3}.
class Peg {
 public:
  constexpr explicit Peg(int value) : value_(value) {
    if (value < 1 || value > kPegCount) {
      throw InvalidInput("peg id must be 1, 2 or 3, got " + std::to_string(value));
    }
  }

  static constexpr Peg from_index(int index) { return Peg(index + 1); }

  constexpr int value() const { return value_; }
  constexpr int index() const { return value_ - 1; }

  friend constexpr auto operator<=>(Peg, Peg) = default;

 private:
  int value_;
};

/// The peg that is neither `a` nor `b` (6 - a - b).
constexpr Peg third_peg(Peg a, Peg b) {
  if (a == b) throw InvalidInput("third_peg needs two distinct pegs");
  return Peg(6 - a.value() - b.value());
}

/// Moves the topmost disc of `from` onto `to`.
struct Move {
  Peg from;
  Peg to;

  constexpr Move(Peg f, Peg t) : from(f), to(t) {
    if (f == t) throw InvalidInput("a move needs distinct pegs");
  }
  constexpr Move(int f, int t) : Move(Peg(f), Peg(t)) {}

  friend constexpr auto operator<=>(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

/// "i>j"
std::string to_string(const Move& mv);

/// Directed graph of permitted move directions over the three pegs.
///
/// Edges are stored as a 6-bit mask in the order (1,2) (2,1) (1,3) (3,1)
/// (2,3) (3,2), which is also the column order of count tables.
class MoveGraph {
 public:
  static constexpr int kEdgeSlots = 6;

  constexpr MoveGraph() = default;

  static MoveGraph complete();
  static MoveGraph from_mask(std::uint8_t mask);
  static MoveGraph from_edges(const std::vector<Move>& edges);

  /// Parses `1>2,2>3,3>1`. Whitespace is ignored. Self loops, duplicates and
  /// pegs outside {1,2,3} are rejected with InvalidInput.
  static MoveGraph parse(std::string_view text);

  bool contains(Peg from, Peg to) const;
  bool contains(const Move& mv) const { return contains(mv.from, mv.to); }
  MoveGraph with(Peg from, Peg to) const;
  MoveGraph without(Peg from, Peg to) const;

  std::uint8_t mask() const { return mask_; }
  int edge_count() const;
  std::vector<Move> edges() const;
  bool strongly_connected() const;
  bool is_complete() const { return mask_ == 0x3F; }

  /// Edge list in canonical slot order, e.g. "1>2,2>3,3>1".
  std::string to_string() const;

  /// Graph with every peg p renamed to relabel[p-1].
  MoveGraph relabeled(const std::array<Peg, kPegCount>& relabel) const;

  friend bool operator==(const MoveGraph&, const MoveGraph&) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// Slot of the ordered pair (i, j) in the 6-edge enumeration, 0-based.
int edge_slot(Peg from, Peg to);
/// Inverse of edge_slot.
Move edge_at_slot(int slot);

/// How the placement distance is checked on a stack.
enum class DistanceRule {
  kPairwise,  // every disc above another on the same peg
  kAdjacent,  // only directly touching discs
};

struct Model {
  MoveGraph graph = MoveGraph::complete();
  int distance = 0;
  DistanceRule rule = DistanceRule::kPairwise;

  static Model classical() { return {}; }
  static Model digraph(MoveGraph g) { return {g, 0, DistanceRule::kPairwise}; }
  static Model relaxed(int c);
};

/// Disc configuration over the three pegs. Stacks are stored bottom-to-top.
///
/// Every State is well formed: discs 1..n each appear exactly once. Whether it
/// is legal depends on a Model and is checked separately.
class State {
 public:
  using Stack = std::vector<Disc>;

  State() = default;

  /// Validates that discs 1..n occur exactly once, else throws MalformedState.
  static State from_stacks(std::array<Stack, kPegCount> stacks);

  const Stack& stack(Peg p) const { return stacks_[p.index()]; }
  const std::array<Stack, kPegCount>& stacks() const { return stacks_; }
  int disc_count() const { return disc_count_; }
  bool empty(Peg p) const { return stacks_[p.index()].empty(); }
  std::optional<Disc> top(Peg p) const;
  Peg peg_of(Disc d) const;

  /// Canonical text key: stacks joined by '|', discs by ','. "3,2,1||"
  std::string key() const;

  /// Returns a copy with the top disc of `from` placed on `to`, no rule checks.
  State moved(Peg from, Peg to) const;
  /// Returns a copy with disc `n` (the largest) removed.
  State without_largest() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  std::array<Stack, kPegCount> stacks_{};
  int disc_count_ = 0;
};

State standard_state(int n, Peg peg);

/// True iff `stack` (bottom-to-top) satisfies the model's distance rule.
bool stack_within_distance(const State::Stack& stack, int distance,
                           DistanceRule rule = DistanceRule::kPairwise);

bool is_legal_state(const Model& m, const State& s);

/// Why a move is not allowed.
enum class Violation {
  kNone,
  kEmptySource,
  kMissingEdge,
  kDistance,
};

std::string_view to_string(Violation v);

/// Thrown by apply / apply_all. `index` is 1-based within a sequence, 0 for a
/// single move.
class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(Violation rule, Move mv, std::size_t index);

  Violation rule() const { return rule_; }
  Move move() const { return move_; }
  std::size_t index() const { return index_; }

 private:
  Violation rule_;
  Move move_;
  std::size_t index_;
};

/// Reports which rule `mv` would break in `s`; kNone when legal.
Violation check_move(const Model& m, const State& s, const Move& mv);

/// Legal moves in lexicographic (from, to) order.
std::vector<Move> legal_moves(const Model& m, const State& s);

State apply(const Model& m, const State& s, const Move& mv);
State apply_all(const Model& m, State s, const MoveSequence& seq);

/// Swaps the `src` and `tgt` stacks; the third stack is unchanged.
State mirror_state(const State& s, Peg src, Peg tgt);

/// Relabels by the src/tgt swap and reverses direction: (x>y) -> (s(y)>s(x)).
Move mirror_move(const Move& mv, Peg src, Peg tgt);

/// Reverse of `seq` with mirror_move applied to each element.
MoveSequence mirror_reverse(const MoveSequence& seq, Peg src, Peg tgt);

/// True iff (x,y) in E implies mirror_move(x>y) in E, i.e. the mirrored
/// reverse of a legal path is again usable.
bool mirror_invariant(const MoveGraph& g, Peg src, Peg tgt);

}  // namespace hanoi
