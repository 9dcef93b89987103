#pragma once

// Constructive move sequences. All generators return plain (from, to) lists;
// legality is the caller's to check with apply_all.

#include "hanoi/model.hpp"

namespace hanoi {

/// Recursive classical transfer, 2^n - 1 moves.
MoveSequence classical_solve(int n, Peg src, Peg tgt);

/// DirectedMove: transfer n discs src -> tgt on a restricted digraph. When
/// the direct edge is missing, disc n goes through the third peg and the
/// smaller discs make three trips. Throws NotStronglyConnected.
MoveSequence directed_move(const MoveGraph& g, int n, Peg src, Peg tgt);

/// Fast transfer with distance C >= 1 that leaves all discs on `tgt` in some
/// legal order. The top n-C-1 discs go to the third peg, the bottom C+1 go
/// over one by one (ending inverted), then the small block follows.
MoveSequence zeta(int n, int distance, Peg src, Peg tgt);

/// Standard-to-standard transfer of length 2 b_{n-1} + 1: zeta(n-1) to the
/// third peg, disc n across, then the mirrored reverse of the first half.
MoveSequence a_symmetric(int n, int distance, Peg src, Peg tgt);

/// Five-step standard-to-standard transfer, k = C+1:
///   zeta(n-k) src->tgt, k moves src->aux, zeta(n-k) tgt->src,
///   k moves aux->tgt, q_sequence(n-k) src->tgt.
/// For 1 <= n <= k it is a_symmetric(n).
MoveSequence q_sequence(int n, int distance, Peg src, Peg tgt);

}  // namespace hanoi
