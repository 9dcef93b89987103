#include "hanoi/solvers.hpp"

#include <string>

namespace hanoi {

namespace {

void check_common(int n, Peg src, Peg tgt) {
  if (n < 0) throw InvalidInput("disc count must be >= 0");
  if (src == tgt) throw InvalidInput("source and target peg must differ");
}

void check_distance(int distance) {
  if (distance < 1) throw InvalidInput("this construction needs distance >= 1");
}

void append_direct(MoveSequence& out, int count, Peg from, Peg to) {
  out.insert(out.end(), static_cast<std::size_t>(count), Move(from, to));
}

void classical_into(MoveSequence& out, int n, Peg src, Peg tgt) {
  if (n == 0) return;
  const Peg aux = third_peg(src, tgt);
  classical_into(out, n - 1, src, aux);
  out.emplace_back(src, tgt);
  classical_into(out, n - 1, aux, tgt);
}

void directed_into(MoveSequence& out, const MoveGraph& g, int n, Peg i, Peg j) {
  if (n == 0) return;
  const Peg k = third_peg(i, j);
  if (g.contains(i, j)) {
    directed_into(out, g, n - 1, i, k);
    out.emplace_back(i, j);
    directed_into(out, g, n - 1, k, j);
  } else {
    directed_into(out, g, n - 1, i, j);
    out.emplace_back(i, k);
    directed_into(out, g, n - 1, j, i);
    out.emplace_back(k, j);
    directed_into(out, g, n - 1, i, j);
  }
}

void zeta_into(MoveSequence& out, int n, int distance, Peg src, Peg tgt) {
  const int block = distance + 1;
  if (n <= block) {
    append_direct(out, n, src, tgt);
    return;
  }
  const Peg aux = third_peg(src, tgt);
  zeta_into(out, n - block, distance, src, aux);
  append_direct(out, block, src, tgt);
  zeta_into(out, n - block, distance, aux, tgt);
}

}  // namespace

MoveSequence classical_solve(int n, Peg src, Peg tgt) {
  check_common(n, src, tgt);
  MoveSequence out;
  classical_into(out, n, src, tgt);
  return out;
}

MoveSequence directed_move(const MoveGraph& g, int n, Peg src, Peg tgt) {
  check_common(n, src, tgt);
  if (!g.strongly_connected()) {
    throw NotStronglyConnected("graph '" + g.to_string() + "' is not strongly connected");
  }
  MoveSequence out;
  directed_into(out, g, n, src, tgt);
  return out;
}

MoveSequence zeta(int n, int distance, Peg src, Peg tgt) {
  check_common(n, src, tgt);
  check_distance(distance);
  MoveSequence out;
  zeta_into(out, n, distance, src, tgt);
  return out;
}

MoveSequence a_symmetric(int n, int distance, Peg src, Peg tgt) {
  check_common(n, src, tgt);
  check_distance(distance);
  if (n == 0) throw InvalidInput("a_symmetric needs n >= 1");
  const Peg aux = third_peg(src, tgt);
  MoveSequence out;
  zeta_into(out, n - 1, distance, src, aux);
  const MoveSequence second = mirror_reverse(out, src, tgt);
  out.emplace_back(src, tgt);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

MoveSequence q_sequence(int n, int distance, Peg src, Peg tgt) {
  check_common(n, src, tgt);
  check_distance(distance);
  const int block = distance + 1;
  if (n == 0) return {};
  if (n <= block) return a_symmetric(n, distance, src, tgt);

  const Peg aux = third_peg(src, tgt);
  const int rest = n - block;
  MoveSequence out;
  zeta_into(out, rest, distance, src, tgt);
  append_direct(out, block, src, aux);
  zeta_into(out, rest, distance, tgt, src);
  append_direct(out, block, aux, tgt);
  const MoveSequence tail = q_sequence(rest, distance, src, tgt);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace hanoi
