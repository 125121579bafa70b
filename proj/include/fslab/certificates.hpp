#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fslab/graph.hpp"
#include "fslab/perm.hpp"
#include "fslab/swaps.hpp"

namespace fslab {

struct ValidationResult {
    bool ok = false;
    // Index of the first illegal move, -1 when all moves were legal but the
    // endpoint differs from the expected bijection.
    int first_illegal_move = -1;
    std::string message;
};

// Replays seq from start; accepts iff every swap is friendly when applied
// and the final bijection equals expected.
ValidationResult validate_sequence(const Graph& x, const Graph& y, const Bijection& start,
                                   const SwapSequence& seq, const Bijection& expected);

// Exchanges the two small-side tokens 0 and 1 of K_{2,t-2} on the cycle
// 0-1-...-(t-1)-0, for odd t >= 3, from any sigma placing them on adjacent
// cycle positions. Exactly t*(t-2) moves.
SwapSequence odd_cycle_exchange(int t, const Bijection& sigma);

// Exchanges tokens 0 and 1 of K_{2,n-2} on a connected non-bipartite x,
// n >= 5, from any sigma with the token positions x-adjacent.
SwapSequence exchange_small_side_k2(const Graph& x, const Bijection& sigma);

// Exchanges two big-side tokens u, v >= 2 of K_{2,n-2} on a connected
// non-bipartite x with no non-trivial cut edge, x != C_n, n >= 5, from any
// sigma with the token positions x-adjacent.
SwapSequence exchange_big_side_k2(const Graph& x, const Bijection& sigma, int u, int v);

// Exchanges small-side tokens 0 and u (1 <= u < k) of K_{k,n-k} on a
// (k-1)-connected non-bipartite x, x != C_n, n >= 2k >= 6, from any sigma
// with the token positions x-adjacent.
SwapSequence exchange_k_general(const Graph& x, int k, const Bijection& sigma, int u);

using GoalPredicate = std::function<bool(const Bijection&)>;

// BFS restricted to swaps along the edges of the given cycle (a vertex list
// of x; consecutive entries and the wrap-around pair must be x-edges).
// Returns a swap sequence reaching a bijection satisfying goal; throws
// CertificateError when the goal is unreachable in the cycle-restricted
// component.
SwapSequence cycle_navigate(const Graph& x, const Graph& y, const std::vector<int>& cycle,
                            const Bijection& sigma, const GoalPredicate& goal);

// prep . cert . prep^-1. Rejects a prep that ever swaps token u or v
// (tracked from start).
SwapSequence transfer_certificate(const Bijection& start, int u, int v, const SwapSequence& prep,
                                  const SwapSequence& cert);

}  // namespace fslab
