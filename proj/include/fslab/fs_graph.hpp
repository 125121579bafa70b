#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fslab/graph.hpp"
#include "fslab/perm.hpp"
#include "fslab/swaps.hpp"

namespace fslab {

// Hard ceiling on the exhaustive search: 12! one-bit states ~ 60 MB.
inline constexpr int kFsDefaultMaxN = 10;
inline constexpr int kFsHardMaxN = 12;

struct ComponentReport {
    int n = 0;
    int component_count = 0;
    // Parallel arrays in discovery order (representatives ascending).
    // representatives[i] is the minimum rank of component i.
    std::vector<uint64_t> sizes;
    std::vector<uint64_t> representatives;

    uint64_t total_states() const;
    bool operator==(const ComponentReport& other) const = default;
};

// Neighbors of sigma in FS(x, y), in x-edge order.
std::vector<Bijection> fs_neighbors(const Graph& x, const Graph& y, const Bijection& sigma);

// Exact component census by BFS over permutation ranks with a bit-packed
// visited set. Deterministic regardless of thread count.
ComponentReport fs_components(const Graph& x, const Graph& y, int threads = 1,
                              int max_n = kFsDefaultMaxN);

bool fs_is_connected(const Graph& x, const Graph& y, int max_n = kFsDefaultMaxN);

// Shortest swap sequence from one bijection to another, or nothing when
// they lie in different components.
std::optional<SwapSequence> fs_path(const Graph& x, const Graph& y, const Bijection& from,
                                    const Bijection& to, int max_n = kFsDefaultMaxN);

}  // namespace fslab
