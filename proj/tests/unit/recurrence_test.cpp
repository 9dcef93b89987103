#include "hanoi/recurrence.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "hanoi/graphs.hpp"
#include "naive_oracle.hpp"

namespace hanoi {
namespace {

using Column = std::vector<long long>;

// Plain 64-bit iteration of the count recurrence, written against pegs
// rather than edge slots.
std::array<std::array<Column, 4>, 4> iterate_counts(const MoveGraph& g, int n_max) {
  std::array<std::array<Column, 4>, 4> t;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) t[i][j].assign(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        const int k = 6 - i - j;
        t[i][j][n] = g.contains(Peg(i), Peg(j))
                         ? t[i][k][n - 1] + t[k][j][n - 1] + 1
                         : 2 * t[i][j][n - 1] + t[j][i][n - 1] + 2;
      }
    }
  }
  return t;
}

TEST(CountTableTest, MatchesIndependentIteration) {
  for (const auto& g : all_strongly_connected_graphs()) {
    const CountTable table = eval_move_counts(g, 30);
    const auto ref = iterate_counts(g, 30);
    for (int n = 0; n <= 30; ++n)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          if (i != j) EXPECT_EQ(table.at(Peg(i), Peg(j), n), BigInt(ref[i][j][n])) << g.to_string();
  }
}

TEST(CountTableTest, MatchesNaiveSearchForSmallN) {
  for (const auto& g : all_strongly_connected_graphs()) {
    const CountTable table = eval_move_counts(g, 5);
    const Model m = Model::digraph(g);
    for (int n = 0; n <= 5; ++n) {
      for (const Move& pair : MoveGraph::complete().edges()) {
        EXPECT_EQ(table.at(pair, n),
                  BigInt(*testing::naive_standard_distance(m, n, pair.from, pair.to)))
            << g.to_string() << ' ' << to_string(pair) << " n=" << n;
      }
    }
  }
}

TEST(CountTableTest, RejectsWeakGraphs) {
  EXPECT_THROW(eval_move_counts(MoveGraph::parse("1>2,2>3"), 3), NotStronglyConnected);
}

TEST(CountTableTest, CompleteGraphIsClassical) {
  const CountTable t = eval_move_counts(MoveGraph::complete(), 64);
  EXPECT_EQ(t.at(Peg(1), Peg(3), 64), BigInt("18446744073709551615"));
}

TEST(ClosedFormTest, FiveEdgeFrozenValues) {
  const CountTable t = eval_move_counts(reference_graph(GraphFamily::kFiveEdge), 7);
  const std::vector<int> expected{0, 2, 7, 19, 47, 113, 267, 629};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(t.at(Peg(2), Peg(1), n), expected[n]);
}

TEST(ClosedFormTest, ChordFrozenValues) {
  const std::vector<std::pair<Move, std::vector<int>>> cases{
      {Move(1, 2), {0, 1, 4, 11, 30, 77}},
      {Move(3, 1), {0, 1, 5, 15, 41, 107}},
      {Move(3, 2), {0, 2, 7, 20, 53, 138}},
      {Move(1, 3), {0, 1, 3, 9, 23, 61}},
  };
  for (const auto& [pair, values] : cases) {
    for (int n = 0; n < static_cast<int>(values.size()); ++n) {
      const QuadValue v = closed_form_chord(pair, n);
      ASSERT_TRUE(v.is_integer()) << to_string(pair) << " n=" << n;
      EXPECT_EQ(v.to_integer(), values[n]) << to_string(pair) << " n=" << n;
    }
  }
}

TEST(ClosedFormTest, LinearValues) {
  BigInt p = 1;
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(closed_form_linear(Move(2, 3), n), p - 1);
    EXPECT_EQ(closed_form_linear(Move(3, 2), n), p - 1);
    EXPECT_EQ(closed_form_linear(Move(1, 2), n), (p - 1) / 2);
    EXPECT_EQ(closed_form_linear(Move(3, 1), n), (p - 1) / 2);
    p *= 3;
  }
}

TEST(ClosedFormTest, AllFamiliesMatchRecurrenceToThirty) {
  for (GraphFamily f : {GraphFamily::kCycle, GraphFamily::kLinear, GraphFamily::kChord}) {
    const MoveGraph g = reference_graph(f);
    const auto ref = iterate_counts(g, 30);
    for (int n = 0; n <= 30; ++n) {
      for (const Move& pair : MoveGraph::complete().edges()) {
        const BigInt want(ref[pair.from.value()][pair.to.value()][n]);
        BigInt got;
        if (f == GraphFamily::kCycle) {
          const QuadValue v = closed_form_cycle(pair, n);
          ASSERT_TRUE(v.is_integer());
          got = v.to_integer();
        } else if (f == GraphFamily::kChord) {
          const QuadValue v = closed_form_chord(pair, n);
          ASSERT_TRUE(v.is_integer());
          got = v.to_integer();
        } else {
          got = closed_form_linear(pair, n);
        }
        EXPECT_EQ(got, want) << to_string(f) << ' ' << to_string(pair) << " n=" << n;
      }
    }
  }
}

TEST(AbSequenceTest, FrozenDistanceOneValues) {
  const std::vector<int> a{0, 1, 3, 5, 9, 13, 21, 29, 45};
  const std::vector<int> b{0, 1, 2, 4, 6, 10, 14, 22, 30};
  const auto values = conjecture_values(8, 1);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(values.a[n], a[n]) << n;
    EXPECT_EQ(values.b[n], b[n]) << n;
  }
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(ab_closed_form(n, AbSequence::kA).to_integer(), a[n]) << n;
    EXPECT_EQ(ab_closed_form(n, AbSequence::kB).to_integer(), b[n]) << n;
  }
}

TEST(AbSequenceTest, ClosedFormAgreesWithRecursionToSixty) {
  const auto values = conjecture_values(61, 1);
  for (int n = 1; n <= 60; ++n) {
    EXPECT_EQ(ab_closed_form(n, AbSequence::kA).to_integer(), values.a[n]) << n;
    EXPECT_EQ(ab_closed_form(n, AbSequence::kB).to_integer(), values.b[n]) << n;
  }
}

TEST(AbSequenceTest, OtherDistances) {
  const auto c2 = conjecture_values(7, 2);
  const std::vector<int> a2{0, 1, 3, 5, 7, 11, 15, 19};
  const std::vector<int> b2{0, 1, 2, 3, 5, 7, 9, 13};
  const auto c3 = conjecture_values(8, 3);
  const std::vector<int> a3{0, 1, 3, 5, 7, 9, 13, 17, 21};
  const std::vector<int> b3{0, 1, 2, 3, 4, 6, 8, 10, 12};
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(c2.a[n], a2[n]);
    EXPECT_EQ(c2.b[n], b2[n]);
  }
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(c3.a[n], a3[n]);
    EXPECT_EQ(c3.b[n], b3[n]);
  }
}

TEST(QLengthTest, FrozenValues) {
  const std::vector<std::pair<int, std::vector<int>>> cases{
      {1, {0, 1, 3, 7, 11, 19, 27, 43, 59}},
      {2, {0, 1, 3, 5, 9, 13, 17, 25}},
      {3, {0, 1, 3, 5, 7, 11, 15, 19, 23}},
  };
  for (const auto& [c, want] : cases) {
    const auto got = q_sequence_lengths(static_cast<int>(want.size()) - 1, c);
    for (std::size_t n = 0; n < want.size(); ++n) EXPECT_EQ(got[n], want[n]) << "C=" << c << " n=" << n;
  }
}

TEST(RootTest, Cubics) {
  const auto den = greatest_real_root({2, -4, -1, 1}, 1e-9);
  EXPECT_LT(den.width(), Rational(1, 1000000000));
  EXPECT_NEAR(den.midpoint(), 2.12457027, 1e-7);
  EXPECT_LE(polynomial_sign(den.coefficients, den.lo) * polynomial_sign(den.coefficients, den.hi), 0);

  const auto rec = greatest_real_root({1, -1, -4, 2}, 1e-9);
  EXPECT_NEAR(rec.midpoint(), 2.34292308, 1e-7);

  EXPECT_NEAR(greatest_real_root({1, 0, -2}, 1e-12).midpoint(), std::sqrt(2.0), 1e-11);
  EXPECT_THROW(greatest_real_root({1, 0, 1}, 1e-6), InvalidInput);
  EXPECT_THROW(greatest_real_root({1, 0, -2}, 0.0), InvalidInput);
}

TEST(GrowthTest, FiveEdgeFollowsReciprocalCubic) {
  const auto g = growth_rate_5edge(1e-9);
  EXPECT_NEAR(g.ratio, 2.34292355, 1e-6);
  EXPECT_LT(g.error_vs_reciprocal, 1e-3);
  EXPECT_TRUE(g.governed_by_reciprocal);
  EXPECT_FALSE(g.stated_order_reproduced);
  EXPECT_NE(g.summary.find("DISCREPANCY"), std::string::npos);
  EXPECT_GT(g.denominator_root.midpoint(), 2.11);
  EXPECT_LT(g.denominator_root.midpoint(), 2.13);
}

}  // namespace
}  // namespace hanoi
