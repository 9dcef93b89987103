#include "hanoi/recurrence.hpp"

#include <cmath>
#include <sstream>

#include "hanoi/graphs.hpp"

namespace hanoi {

namespace {

QuadValue q(long d, long a_num, long a_den = 1, long b_num = 0, long b_den = 1) {
  return QuadValue(Rational(a_num, a_den), Rational(b_num, b_den), d);
}

void require_non_negative(int n) {
  if (n < 0) throw InvalidInput("n must be >= 0, got " + std::to_string(n));
}

bool with_cycle(const Move& pair) {
  // 1>2, 2>3, 3>1
  return (pair.from.value() % 3) + 1 == pair.to.value();
}

}  // namespace

CountTable::CountTable(MoveGraph graph,
                       std::array<std::vector<BigInt>, MoveGraph::kEdgeSlots> columns)
    : graph_(graph), columns_(std::move(columns)) {
  for (const auto& col : columns_) {
    if (col.size() != columns_[0].size() || col.empty()) {
      throw InvalidInput("count table columns must be non-empty and of equal length");
    }
  }
}

const BigInt& CountTable::at(Peg from, Peg to, int n) const {
  if (n < 0 || n > n_max()) throw InvalidInput("n outside count table range");
  return columns_[edge_slot(from, to)][n];
}

CountTable eval_move_counts(const MoveGraph& g, int n_max) {
  require_non_negative(n_max);
  if (!g.strongly_connected()) {
    throw NotStronglyConnected("graph '" + g.to_string() + "' is not strongly connected");
  }
  std::array<std::vector<BigInt>, MoveGraph::kEdgeSlots> cols;
  for (auto& c : cols) {
    c.reserve(n_max + 1);
    c.push_back(0);
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int slot = 0; slot < MoveGraph::kEdgeSlots; ++slot) {
      const Move e = edge_at_slot(slot);
      const Peg k = third_peg(e.from, e.to);
      BigInt v;
      if (g.contains(e)) {
        v = cols[edge_slot(e.from, k)][n - 1] + cols[edge_slot(k, e.to)][n - 1] + 1;
      } else {
        v = 2 * cols[slot][n - 1] + cols[edge_slot(e.to, e.from)][n - 1] + 2;
      }
      cols[slot].push_back(std::move(v));
    }
  }
  return CountTable(g, std::move(cols));
}

QuadValue closed_form_cycle(const Move& pair, int n) {
  require_non_negative(n);
  constexpr long d = 3;
  const QuadValue two_root3 = q(d, 0, 1, 2);
  const QuadValue plus = q(d, 1, 1, 1).pow(n);   // (1 + sqrt3)^n
  const QuadValue minus = q(d, 1, 1, -1).pow(n); // (1 - sqrt3)^n
  const QuadValue one = q(d, 1);
  if (with_cycle(pair)) {
    return q(d, 1, 1, 1) / two_root3 * plus - q(d, 1, 1, -1) / two_root3 * minus - one;
  }
  return q(d, 2, 1, 1) / two_root3 * plus - q(d, 2, 1, -1) / two_root3 * minus - one;
}

BigInt closed_form_linear(const Move& pair, int n) {
  require_non_negative(n);
  const BigInt three_n = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n));
  const bool touches_middle = pair.from.value() == 1 || pair.to.value() == 1;
  if (touches_middle) return (three_n - 1) / 2;
  return three_n - 1;
}

QuadValue closed_form_chord(const Move& pair, int n) {
  require_non_negative(n);
  constexpr long d = 17;
  const QuadValue root17 = QuadValue::root(d);
  const QuadValue phi_n = q(d, 1, 2, 1, 2).pow(n);  // ((1 + sqrt17) / 2)^n
  const QuadValue psi_n = q(d, 1, 2, -1, 2).pow(n); // ((1 - sqrt17) / 2)^n
  const QuadValue eight_root17 = q(d, 0, 1, 8);
  const QuadValue four_root17 = q(d, 0, 1, 4);

  const int from = pair.from.value();
  const int to = pair.to.value();
  if ((from == 2 && to == 3) || (from == 1 && to == 2)) {
    return q(d, -3, 4) - q(d, 11, 1, -3) / eight_root17 * psi_n +
           q(d, 11, 1, 3) / eight_root17 * phi_n;
  }
  if (from == 3 && to == 1) {
    const QuadValue half = q(d, 1, 2);
    if (n == 0) {
      return half * (q(d, 1) - q(d, 3) + q(d, 4, 1, 1) / root17 - q(d, 4, 1, -1) / root17);
    }
    return half * (q(d, -3) + q(d, 4, 1, 1) / root17 * phi_n - q(d, 4, 1, -1) / root17 * psi_n);
  }
  if ((from == 3 && to == 2) || (from == 2 && to == 1)) {
    return q(d, -5, 4) - q(d, 21, 1, -5) / eight_root17 * psi_n +
           q(d, 21, 1, 5) / eight_root17 * phi_n;
  }
  // (1, 3)
  return q(d, -1, 2) - q(d, 5, 1, -1) / four_root17 * psi_n + q(d, 5, 1, 1) / four_root17 * phi_n;
}

QuadValue ab_closed_form(int n, AbSequence which) {
  require_non_negative(n);
  constexpr long d = 2;
  if (which == AbSequence::kB) {
    return (ab_closed_form(n + 1, AbSequence::kA) - q(d, 1)) / q(d, 2);
  }
  const QuadValue r = QuadValue::root(d);
  const QuadValue lead = q(d, 3, 2, 1);    // (3 + 2 sqrt2) / 2
  const QuadValue trail = q(d, 3, 2, -1);  // (3 - 2 sqrt2) / 2
  return lead * r.pow(n) + trail * (-r).pow(n) - q(d, 3);
}

ConjectureValues conjecture_values(int n_max, int distance) {
  require_non_negative(n_max);
  if (distance < 1) throw InvalidInput("conjecture values need distance >= 1");
  const int k = distance + 1;
  ConjectureValues out;
  out.distance = distance;
  out.b.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n <= k) {
      out.b.emplace_back(n);
    } else {
      out.b.push_back(2 * out.b[n - k] + k);
    }
  }
  out.a.reserve(n_max + 1);
  out.a.emplace_back(0);
  for (int n = 1; n <= n_max; ++n) out.a.push_back(2 * out.b[n - 1] + 1);
  return out;
}

std::vector<BigInt> q_sequence_lengths(int n_max, int distance) {
  const auto values = conjecture_values(n_max, distance);
  const int k = distance + 1;
  std::vector<BigInt> x;
  x.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n == 0) {
      x.emplace_back(0);
    } else if (n <= k) {
      x.emplace_back(2 * n - 1);
    } else {
      x.push_back(2 * values.b[n - k] + x[n - k] + 2 * k);
    }
  }
  return x;
}

int polynomial_sign(const std::vector<BigInt>& coefficients, const Rational& x) {
  Rational acc = 0;
  for (const auto& c : coefficients) acc = acc * x + Rational(c);
  return acc.sign();
}

RootBracket greatest_real_root(const std::vector<BigInt>& coefficients, double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidInput("tolerance must be > 0");
  if (coefficients.empty() || coefficients.front() == 0) {
    throw InvalidInput("leading coefficient must be non-zero");
  }
  // Cauchy bound: every root satisfies |x| < 1 + max |c_i / c_0|.
  Rational bound = 0;
  const BigInt lead = abs(coefficients.front());
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    Rational ratio(abs(coefficients[i]), lead);
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  const Rational step(1, 64);
  Rational hi = bound;
  const int top_sign = polynomial_sign(coefficients, hi);
  Rational lo = hi - step;
  while (true) {
    if (lo < -bound) throw InvalidInput("polynomial has no real root");
    const int s = polynomial_sign(coefficients, lo);
    if (s == 0) return {coefficients, lo, lo};
    if (s != top_sign) break;
    hi = lo;
    lo -= step;
  }
  // Invariant: sign(p(lo)) != top_sign == sign(p(hi)).
  while ((hi - lo).convert_to<double>() >= tolerance) {
    Rational mid = (lo + hi) / 2;
    const int s = polynomial_sign(coefficients, mid);
    if (s == 0) return {coefficients, mid, mid};
    if (s == top_sign) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {coefficients, lo, hi};
}

GrowthReport growth_rate_5edge(double tolerance, int n, Move pair) {
  if (n < 1) throw InvalidInput("growth ratio needs n >= 1");
  GrowthReport report;
  report.denominator_root = greatest_real_root({2, -4, -1, 1}, tolerance);
  report.reciprocal_root = greatest_real_root({1, -1, -4, 2}, tolerance);
  report.pair = pair;
  report.n = n;

  const auto table = eval_move_counts(reference_graph(GraphFamily::kFiveEdge), n + 1);
  const BigInt& cur = table.at(pair, n);
  const BigInt& next = table.at(pair, n + 1);
  report.ratio = Rational(next, cur).convert_to<double>();
  report.error_vs_denominator = std::abs(report.ratio - report.denominator_root.midpoint());
  report.error_vs_reciprocal = std::abs(report.ratio - report.reciprocal_root.midpoint());
  report.governed_by_reciprocal = report.error_vs_reciprocal < report.error_vs_denominator;
  report.stated_order_reproduced = std::abs(report.ratio - 2.12) < 0.01;

  std::ostringstream os;
  os.precision(9);
  os << "N" << pair.from.value() << pair.to.value() << "(" << n + 1 << ")/N" << pair.from.value()
     << pair.to.value() << "(" << n << ") = " << report.ratio
     << "; greatest root of 2x^3-4x^2-x+1 = " << report.denominator_root.midpoint()
     << "; greatest root of x^3-x^2-4x+2 = " << report.reciprocal_root.midpoint() << "; growth "
     << (report.governed_by_reciprocal ? "follows the reciprocal cubic (~2.343^n)"
                                       : "follows the denominator cubic (~2.12^n)");
  if (!report.stated_order_reproduced) os << "; DISCREPANCY: the ~2.12^n order is not reproduced";
  report.summary = os.str();
  return report;
}

}  // namespace hanoi
