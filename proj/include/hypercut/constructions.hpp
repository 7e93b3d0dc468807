#pragma once

// Explicit P_k- and C_k-structure cuts of Q_n. Every family isolates the
// all-zeros vertex: the union of its elements contains all n neighbors of
// 00...0 and never 00...0 itself.

#include "hypercut/family.hpp"

namespace hypercut {

/// P_k-structure cut of Q_n for n >= 3, 3 <= k <= 2^{n-1}.
///
/// Long paths (odd k >= 2n-1, even k >= 2n) use a single path that zig-zags
/// through every neighbor of the origin and then continues along a
/// Hamiltonian cycle of the x^{n-1} = 1 half. Shorter paths split the
/// neighbors into consecutive windows of (k+1)/2 (odd k) or k/2 (even k)
/// coordinates; an even-k path also carries one trailing vertex. When the
/// window size does not divide n, the last window is shifted to end at n-1
/// and overlaps its predecessor.
///
/// Cardinality: ceil(2n/(k+1)) for odd k, ceil(2n/k) for even k.
CutFamily build_path_cut(int n, int k);

/// C_k-structure cut of Q_n for n >= 5, even 6 <= k <= 2^{n-2}.
///
/// For k/2 <= n each cycle closes a window of k/2 consecutive neighbors; for
/// k/2 >= n+1 a single cycle runs through all neighbors and returns through
/// the subcube x^{n-2} = 0, x^{n-1} = 1. Cardinality ceil(2n/k).
CutFamily build_cycle_cut(int n, int k);

/// The vertex every constructed family isolates.
Vertex canonical_isolating_vertex(const CutFamily& f);

}  // namespace hypercut
