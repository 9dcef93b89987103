#include "hanoi/graphs.hpp"

#include <algorithm>

#include "hanoi/recurrence.hpp"

namespace hanoi {

std::string_view to_string(GraphFamily f) {
  switch (f) {
    case GraphFamily::kCycle: return "cycle";
    case GraphFamily::kLinear: return "linear";
    case GraphFamily::kChord: return "chord";
    case GraphFamily::kFiveEdge: return "five-edge";
    case GraphFamily::kComplete: return "complete";
  }
  return "unknown";
}

MoveGraph reference_graph(GraphFamily f) {
  switch (f) {
    case GraphFamily::kCycle: return MoveGraph::parse("1>2,2>3,3>1");
    case GraphFamily::kLinear: return MoveGraph::parse("1>2,2>1,1>3,3>1");
    case GraphFamily::kChord: return MoveGraph::parse("1>2,1>3,3>1,2>3");
    case GraphFamily::kFiveEdge: return MoveGraph::complete().without(Peg(2), Peg(1));
    case GraphFamily::kComplete: return MoveGraph::complete();
  }
  throw InvalidInput("unknown graph family");
}

std::vector<Relabeling> all_relabelings() {
  std::array<int, kPegCount> perm{1, 2, 3};
  std::vector<Relabeling> out;
  do {
    out.push_back({Peg(perm[0]), Peg(perm[1]), Peg(perm[2])});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<Relabeling> find_relabeling(const MoveGraph& from, const MoveGraph& to) {
  for (const auto& p : all_relabelings()) {
    if (from.relabeled(p) == to) return p;
  }
  return std::nullopt;
}

std::optional<GraphFamily> classify(const MoveGraph& g) {
  if (!g.strongly_connected()) return std::nullopt;
  for (GraphFamily f : kAllFamilies) {
    if (find_relabeling(g, reference_graph(f))) return f;
  }
  return std::nullopt;
}

std::vector<MoveGraph> all_strongly_connected_graphs() {
  std::vector<MoveGraph> out;
  for (unsigned mask = 0; mask < 64; ++mask) {
    auto g = MoveGraph::from_mask(static_cast<std::uint8_t>(mask));
    if (g.strongly_connected()) out.push_back(g);
  }
  return out;
}

std::vector<GraphClass> enumerate_graphs() {
  std::vector<GraphClass> classes;
  for (GraphFamily f : kAllFamilies) classes.push_back({f, reference_graph(f), {}});
  for (const auto& g : all_strongly_connected_graphs()) {
    auto family = classify(g);
    if (!family) throw InvalidInput("unclassified strongly connected graph " + g.to_string());
    classes[static_cast<std::size_t>(*family)].members.push_back(g);
  }
  return classes;
}

std::optional<BigInt> closed_form_count(const MoveGraph& g, const Move& pair, int n) {
  const auto family = classify(g);
  if (!family || *family == GraphFamily::kFiveEdge) return std::nullopt;
  const auto relabel = find_relabeling(g, reference_graph(*family));
  const Move mapped(relabel->at(pair.from.index()), relabel->at(pair.to.index()));
  switch (*family) {
    case GraphFamily::kCycle: return closed_form_cycle(mapped, n).to_integer();
    case GraphFamily::kLinear: return closed_form_linear(mapped, n);
    case GraphFamily::kChord: return closed_form_chord(mapped, n).to_integer();
    case GraphFamily::kComplete:
      return BigInt(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n)) - 1);
    case GraphFamily::kFiveEdge: break;
  }
  return std::nullopt;
}

}  // namespace hanoi
