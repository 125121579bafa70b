#include "fslab/swaps.hpp"

#include <utility>

namespace fslab {

bool swap_is_friendly(const Graph& x, const Graph& y, const Bijection& sigma, int a, int b) {
    return x.has_edge(a, b) && y.has_edge(sigma[a], sigma[b]);
}

void apply_swap(Bijection& sigma, int a, int b) { std::swap(sigma[a], sigma[b]); }

Bijection apply_sequence(const Bijection& sigma, const SwapSequence& seq) {
    Bijection result = sigma;
    for (auto [a, b] : seq.moves) apply_swap(result, a, b);
    return result;
}

}  // namespace fslab
