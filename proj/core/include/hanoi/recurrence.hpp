#pragma once

// Exact evaluation of the move-count recurrences and their closed forms.

#include <array>
#include <string>
#include <vector>

#include "hanoi/model.hpp"
#include "hanoi/quad.hpp"

namespace hanoi {

/// N(i, j, n) for all six ordered peg pairs and n = 0..n_max.
class CountTable {
 public:
  CountTable(MoveGraph graph, std::array<std::vector<BigInt>, MoveGraph::kEdgeSlots> columns);

  const MoveGraph& graph() const { return graph_; }
  int n_max() const { return static_cast<int>(columns_[0].size()) - 1; }
  const BigInt& at(Peg from, Peg to, int n) const;
  const BigInt& at(const Move& pair, int n) const { return at(pair.from, pair.to, n); }
  /// Column in edge-slot order (see MoveGraph).
  const std::vector<BigInt>& column(int slot) const { return columns_.at(slot); }

 private:
  MoveGraph graph_;
  std::array<std::vector<BigInt>, MoveGraph::kEdgeSlots> columns_;
};

/// Iterates the DirectedMove count recurrence:
///   N(i,j,n) = N(i,k,n-1) + N(k,j,n-1) + 1       if (i,j) in E
///   N(i,j,n) = 2 N(i,j,n-1) + N(j,i,n-1) + 2     otherwise
/// with N(., ., 0) = 0. Throws NotStronglyConnected.
CountTable eval_move_counts(const MoveGraph& g, int n_max);

/// Directed cycle 1>2>3>1: sqrt(3) closed forms. The result is an integer.
QuadValue closed_form_cycle(const Move& pair, int n);

/// Bidirectional path with peg 1 in the middle: 3^n - 1 between the ends,
/// (3^n - 1) / 2 for pairs touching the middle peg.
BigInt closed_form_linear(const Move& pair, int n);

/// Graph {1>2, 1>3, 3>1, 2>3}: sqrt(17) closed forms, N(3,1,0) handled by
/// its own branch.
QuadValue closed_form_chord(const Move& pair, int n);

enum class AbSequence { kA, kB };

/// a_n = (3+2r)/2 * r^n + (3-2r)/2 * (-r)^n - 3 with r = sqrt(2) (distance 1,
/// standard to standard). b_n is taken as (a_{n+1} - 1) / 2.
QuadValue ab_closed_form(int n, AbSequence which);

struct ConjectureValues {
  int distance = 1;
  std::vector<BigInt> a;  // a_n = 2 b_{n-1} + 1, a_0 = 0
  std::vector<BigInt> b;  // b_n = 2 b_{n-C-1} + C + 1, b_m = m for m <= C+1
};

ConjectureValues conjecture_values(int n_max, int distance);

/// Lengths of q_sequence: x_n = 2 b_{n-k} + x_{n-k} + 2k for n > k = C+1,
/// x_0 = 0 and x_m = 2m - 1 for 1 <= m <= k.
std::vector<BigInt> q_sequence_lengths(int n_max, int distance);

/// A rational interval [lo, hi] with a sign change of the polynomial.
struct RootBracket {
  std::vector<BigInt> coefficients;  // highest degree first
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  double midpoint() const { return ((lo + hi) / 2).convert_to<double>(); }
};

/// Exact sign of p(x); coefficients highest degree first.
int polynomial_sign(const std::vector<BigInt>& coefficients, const Rational& x);

/// Brackets the greatest real root to width < tolerance by exact bisection.
/// Throws InvalidInput when tolerance <= 0 or no real root exists.
RootBracket greatest_real_root(const std::vector<BigInt>& coefficients, double tolerance);

/// Growth of the five-edge (complete minus 2>1) counts versus the two cubics
/// tied to its generating functions.
struct GrowthReport {
  RootBracket denominator_root;  // greatest root of 2x^3 - 4x^2 - x + 1
  RootBracket reciprocal_root;   // greatest root of x^3 - x^2 - 4x + 2
  Move pair{2, 1};
  int n = 40;
  double ratio = 0.0;  // N(pair, n+1) / N(pair, n)
  double error_vs_denominator = 0.0;
  double error_vs_reciprocal = 0.0;
  bool governed_by_reciprocal = false;
  /// False when the ratio does not settle near 2.12.
  bool stated_order_reproduced = false;
  std::string summary;
};

GrowthReport growth_rate_5edge(double tolerance, int n = 40, Move pair = Move(2, 1));

}  // namespace hanoi
