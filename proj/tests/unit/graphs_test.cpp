#include "hanoi/graphs.hpp"

#include <gtest/gtest.h>

#include <set>

namespace hanoi {
namespace {

TEST(GraphEnumerationTest, EighteenGraphsInFiveClasses) {
  const auto all = all_strongly_connected_graphs();
  EXPECT_EQ(all.size(), 18u);
  const auto classes = enumerate_graphs();
  ASSERT_EQ(classes.size(), 5u);
  const std::vector<std::size_t> sizes{2, 3, 6, 6, 1};
  std::size_t total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    EXPECT_EQ(classes[i].members.size(), sizes[i]) << to_string(classes[i].family);
    total += classes[i].members.size();
  }
  EXPECT_EQ(total, 18u);
}

TEST(GraphEnumerationTest, ClassesAreRelabellingOrbits) {
  for (const auto& c : enumerate_graphs()) {
    std::set<std::uint8_t> orbit;
    for (const auto& p : all_relabelings()) orbit.insert(c.representative.relabeled(p).mask());
    std::set<std::uint8_t> members;
    for (const auto& g : c.members) members.insert(g.mask());
    EXPECT_EQ(orbit, members) << to_string(c.family);
  }
}

TEST(GraphEnumerationTest, BruteForceStrongConnectivity) {
  // Reachability by closure over the edge list.
  for (unsigned mask = 0; mask < 64; ++mask) {
    const auto g = MoveGraph::from_mask(static_cast<std::uint8_t>(mask));
    bool reach[4][4] = {};
    for (int i = 1; i <= 3; ++i) reach[i][i] = true;
    for (const Move& e : g.edges()) reach[e.from.value()][e.to.value()] = true;
    for (int k = 1; k <= 3; ++k)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    bool strong = true;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) strong = strong && reach[i][j];
    EXPECT_EQ(g.strongly_connected(), strong) << g.to_string();
  }
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify(MoveGraph::parse("1>3,3>2,2>1")), GraphFamily::kCycle);
  EXPECT_EQ(classify(MoveGraph::parse("2>1,1>2,2>3,3>2")), GraphFamily::kLinear);
  EXPECT_EQ(classify(MoveGraph::complete().without(Peg(1), Peg(3))), GraphFamily::kFiveEdge);
  EXPECT_EQ(classify(MoveGraph::complete()), GraphFamily::kComplete);
  EXPECT_EQ(classify(MoveGraph::parse("1>2,2>3")), std::nullopt);
}

TEST(ClosedFormCountTest, CoversAllButFiveEdge) {
  for (const auto& g : all_strongly_connected_graphs()) {
    const bool five = classify(g) == GraphFamily::kFiveEdge;
    EXPECT_EQ(closed_form_count(g, Move(1, 2), 3).has_value(), !five) << g.to_string();
  }
  EXPECT_EQ(closed_form_count(MoveGraph::complete(), Move(3, 1), 10), BigInt(1023));
}

}  // namespace
}  // namespace hanoi
