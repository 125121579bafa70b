#pragma once

#include <utility>
#include <vector>

#include "fslab/graph.hpp"
#include "fslab/perm.hpp"

namespace fslab {

// A walk in FS(X,Y): X-edges along which swaps are applied, left to right.
struct SwapSequence {
    std::vector<std::pair<int, int>> moves;

    int size() const { return static_cast<int>(moves.size()); }
    void push(int a, int b) { moves.emplace_back(a, b); }
    void append(const SwapSequence& other) {
        moves.insert(moves.end(), other.moves.begin(), other.moves.end());
    }
    // Same position pairs in reverse order; swaps are involutions.
    SwapSequence reversed() const {
        SwapSequence r;
        r.moves.assign(moves.rbegin(), moves.rend());
        return r;
    }
};

// A swap along (a, b) is friendly when ab is an X-edge and the two tokens
// are Y-adjacent.
bool swap_is_friendly(const Graph& x, const Graph& y, const Bijection& sigma, int a, int b);

// Applies one swap without legality checking.
void apply_swap(Bijection& sigma, int a, int b);

// Applies a whole sequence without legality checking (use the certificate
// validator when legality matters).
Bijection apply_sequence(const Bijection& sigma, const SwapSequence& seq);

}  // namespace fslab
