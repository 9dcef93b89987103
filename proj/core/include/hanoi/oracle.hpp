#pragma once

// Exhaustive breadth-first search over legal states: exact optimal distances,
// reproducible witnesses, and the search for shortest symmetric solutions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hanoi/model.hpp"
#include "hanoi/quad.hpp"

namespace hanoi {

/// Rough per-state footprint of the visited map plus layer lists.
inline constexpr std::size_t kApproxBytesPerState = 48;
/// Default budget: about 4 GiB worth of states.
inline constexpr std::size_t kDefaultMaxStates = (std::size_t{4} << 30) / kApproxBytesPerState;

/// The visited set outgrew SearchOptions::max_states.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  explicit ResourceLimitExceeded(std::size_t cap)
      : std::runtime_error("resource limit: state budget of " + std::to_string(cap) +
                           " states exceeded (raise --max-states)"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

struct SearchOptions {
  std::size_t max_states = kDefaultMaxStates;
  bool want_witness = true;
};

struct SearchResult {
  std::optional<std::uint64_t> distance;  // nullopt: goal unreachable
  std::optional<MoveSequence> witness;
  std::size_t explored = 0;
  std::size_t peak_frontier = 0;

  bool reachable() const { return distance.has_value(); }
};

class GoalPredicate {
 public:
  enum class Kind { kStandardOn, kAllOn, kExact };

  /// The single standard state on `p`.
  static GoalPredicate standard_on(Peg p) { return GoalPredicate(Kind::kStandardOn, p, {}); }
  /// Any legal state with both other pegs empty.
  static GoalPredicate all_on(Peg p) { return GoalPredicate(Kind::kAllOn, p, {}); }
  static GoalPredicate exact(State s) { return GoalPredicate(Kind::kExact, Peg(1), std::move(s)); }

  Kind kind() const { return kind_; }
  bool matches(const State& s) const;

 private:
  GoalPredicate(Kind k, Peg p, State s) : kind_(k), peg_(p), state_(std::move(s)) {}

  Kind kind_;
  Peg peg_;
  State state_;
};

/// Minimal number of legal moves from `start` to any goal state. The witness
/// takes the lexicographically smallest (from, to) move that stays on an
/// optimal path at every step. Throws InvalidInput for an illegal start and
/// ResourceLimitExceeded when the budget is hit.
SearchResult bfs_distance(const Model& m, const State& start, const GoalPredicate& goal,
                          const SearchOptions& opts = {});

/// Size of the component reachable from `start`.
std::size_t reachable_state_count(const Model& m, const State& start,
                                  const SearchOptions& opts = {});

struct OptimalityRow {
  Move pair{1, 2};
  std::optional<std::uint64_t> bfs;
  std::size_t constructive = 0;  // |directed_move|
  bool constructive_legal = false;
  BigInt recurrence;

  bool ok() const {
    return bfs && constructive_legal && BigInt(*bfs) == recurrence &&
           BigInt(constructive) == recurrence;
  }
};

struct OptimalityReport {
  MoveGraph graph;
  int n = 0;
  std::vector<OptimalityRow> rows;  // the six ordered pairs, edge-slot order

  bool ok() const;
  /// One line per mismatching pair; empty when ok().
  std::vector<std::string> mismatches() const;
};

/// Compares BFS distance, |directed_move| and the count recurrence for every
/// ordered pair with n discs on `g` (distance 0).
OptimalityReport verify_optimality(const MoveGraph& g, int n, const SearchOptions& opts = {});

/// Minimal length of a symmetric legal sequence standard(src) -> standard(tgt).
/// Odd length 2m+1 is found through a state W at distance m with a legal move
/// W -> mirror(W); even length 2m through W == mirror(W). Requires the graph
/// to be closed under mirror_move (else InvalidInput).
SearchResult shortest_symmetric(const Model& m, int n, Peg src, Peg tgt,
                                const SearchOptions& opts = {});

struct ConjectureRow {
  int n = 0;
  std::uint64_t bfs_std = 0;
  std::uint64_t bfs_any = 0;
  BigInt a_conj;
  BigInt b_conj;
  std::size_t len_a_sym = 0;
  std::size_t len_q = 0;

  bool match() const { return BigInt(bfs_std) == a_conj && BigInt(bfs_any) == b_conj; }
};

struct ConjectureReport {
  int distance = 1;
  std::vector<ConjectureRow> rows;
  /// Problems that make the report inconsistent (BFS longer than a
  /// constructive sequence, illegal constructive output). Conjecture
  /// mismatches are not problems.
  std::vector<std::string> problems;

  bool consistent() const { return problems.empty(); }
};

/// Rows n = 1..n_max on the complete graph, pegs 1 -> 2.
ConjectureReport conjecture_probe(int distance, int n_max, const SearchOptions& opts = {});

}  // namespace hanoi
