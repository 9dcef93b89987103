#pragma once

// Strongly connected move graphs on three pegs and their isomorphism classes.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "hanoi/model.hpp"
#include "hanoi/quad.hpp"

namespace hanoi {

/// The five isomorphism classes of strongly connected 3-peg digraphs.
enum class GraphFamily {
  kCycle,     // 1>2, 2>3, 3>1
  kLinear,    // 1<>2, 1<>3 (peg 1 in the middle)
  kChord,     // 1>2, 1>3, 3>1, 2>3
  kFiveEdge,  // complete minus 2>1
  kComplete,
};

inline constexpr std::array<GraphFamily, 5> kAllFamilies{
    GraphFamily::kCycle, GraphFamily::kLinear, GraphFamily::kChord, GraphFamily::kFiveEdge,
    GraphFamily::kComplete};

std::string_view to_string(GraphFamily f);

/// The labelled representative each family's closed forms are written for.
MoveGraph reference_graph(GraphFamily f);

using Relabeling = std::array<Peg, kPegCount>;

/// All six peg permutations, identity first.
std::vector<Relabeling> all_relabelings();

/// A permutation p with from.relabeled(p) == to, if one exists.
std::optional<Relabeling> find_relabeling(const MoveGraph& from, const MoveGraph& to);

/// Family of a strongly connected graph; nullopt otherwise.
std::optional<GraphFamily> classify(const MoveGraph& g);

/// Every strongly connected edge subset, in increasing mask order.
std::vector<MoveGraph> all_strongly_connected_graphs();

struct GraphClass {
  GraphFamily family;
  MoveGraph representative;
  std::vector<MoveGraph> members;
};

/// Strongly connected graphs grouped by peg relabelling, in family order.
std::vector<GraphClass> enumerate_graphs();

/// Closed-form N(pair, n) on `g` when its family has one (all but the
/// five-edge class). The pair is mapped onto the family's reference graph first.
std::optional<BigInt> closed_form_count(const MoveGraph& g, const Move& pair, int n);

}  // namespace hanoi
