#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

struct BipartiteResult {
    bool bipartite;
    // Two-coloring (0/1 per vertex) when bipartite.
    std::vector<int> coloring;
    // Odd closed walk witness when not bipartite.
    std::vector<int> odd_closed_walk;
};

bool is_connected(const Graph& g);

BipartiteResult is_bipartite(const Graph& g);

// Minimum vertex cut size; order-1 for complete graphs, 0 when disconnected.
// Max-flow on the vertex-split digraph (Menger).
int vertex_connectivity(const Graph& g);

// All cut edges, (u, v) with u < v, lexicographic.
std::vector<std::pair<int, int>> bridges(const Graph& g);

// Path v1..vk whose internal vertices have degree exactly 2, every path
// edge is a cut edge, and both ends have degree >= 2. First such path in
// lexicographic order, or nothing. Requires g connected and k >= 2.
std::optional<std::vector<int>> find_nontrivial_k_bridge(const Graph& g, int k);

// Minimum-length odd cycle as a vertex sequence (no repeated endpoint),
// lexicographically smallest among the shortest; nothing when bipartite.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g);

// Shortest cycle containing edge (u, v), returned as u, ..., v so that
// consecutive vertices are adjacent and (v, u) closes the cycle.
// Deterministic lexicographic tie-breaking; nothing if (u, v) is a cut edge.
std::optional<std::vector<int>> shortest_cycle_through_edge(const Graph& g, int u, int v);

// Connected and 2-regular.
bool is_cycle_graph(const Graph& g);

// Minimum upper-triangle edge bitmask over all vertex relabelings.
// Isomorphism-invariant; only for n <= 12 (n! scan with pruning).
uint64_t canonical_mask(const Graph& g);

// Isomorphic to Wilson's order-7 exceptional graph.
bool is_theta(const Graph& g);

}  // namespace fslab
