#pragma once

// Executable checks of the structural facts used by the lower-bound
// arguments: sequence replay, symmetry, largest-disc projection, lambda
// states, and named claim harnesses.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hanoi/model.hpp"
#include "hanoi/oracle.hpp"

namespace hanoi {

struct ValidationReport {
  bool ok = false;
  std::optional<std::size_t> first_bad_index;  // 1-based
  std::optional<Violation> violation;
  std::optional<State> final_state;
  std::size_t length = 0;
};

/// Replays `seq` from `start` without throwing.
ValidationReport validate(const Model& m, const State& start, const MoveSequence& seq);

/// Move i and move L+1-i are mirror images (mirror_move). When a start state
/// is given, the sequence is also replayed and both moves must carry the same
/// disc; an illegal replay is not symmetric.
bool is_symmetric(const MoveSequence& seq, Peg src, Peg tgt);
bool is_symmetric(const MoveSequence& seq, Peg src, Peg tgt, const Model& m, const State& start);

/// Drops every move of the largest disc. The result is legal from
/// start.without_largest(). Throws IllegalMove when `seq` is illegal.
MoveSequence project_out_largest(const MoveSequence& seq, const Model& m, const State& start);

/// Number of moves of disc n in `seq` replayed from `start`.
std::size_t moves_of_largest(const MoveSequence& seq, const Model& m, const State& start);

enum class LambdaReading {
  /// Disc n-1 alone on its peg (lambda) / exactly n-1 then n (lambda').
  kStrict,
  /// Other discs may sit above disc n-1 / above disc n.
  kRelaxed,
};

struct LambdaFlags {
  bool is_lambda = false;
  bool is_lambda_prime = false;
};

/// lambda: disc n alone on `initial`, disc n-1 on a second peg, discs
/// 1..n-2 on the third. lambda': `initial` empty, disc n directly on disc n-1,
/// discs 1..n-2 on the third peg. Needs n >= 2, otherwise both are false.
LambdaFlags lambda_predicates(const State& s, int n, Peg initial,
                              LambdaReading reading = LambdaReading::kStrict);

struct HarnessParams {
  int distance = 1;
  int n_max = 8;
  std::vector<int> block_sizes{2, 3, 4, 5};  // k values for claim51-inequality
  int samples = 100;                         // projection suite
  SearchOptions search;
};

struct Counterexample {
  int n = 0;
  std::string detail;
};

struct HarnessReport {
  std::string suite;
  HarnessParams params;
  bool pass = false;
  std::vector<Counterexample> counterexamples;
  std::size_t checks = 0;
};

/// Suite ids accepted by claim_harness.
std::vector<std::string_view> harness_suites();

/// Runs one named bundle:
///   eq3-vs-oracle       BFS std->std == a_n and std->all-on-peg == b_n
///   claim51-inequality  x_n - x_{n-k} >= y_n - y_{n-k}
///   dn-negative         2 b_{n-1} + 1 < 3 b_{n-2} + 4 (distance 1)
///   symmetric-odd       shortest symmetric length is odd
///   symmetric-equals-a  shortest symmetric length equals a_n
///   projection          dropping disc n keeps oracle witnesses legal
/// Throws InvalidInput for an unknown id.
HarnessReport claim_harness(std::string_view suite, const HarnessParams& params);

/// {"suite":..., "params":{...}, "pass":..., "checks":..., "counterexamples":[...]}
std::string to_json(const HarnessReport& report);

}  // namespace hanoi
