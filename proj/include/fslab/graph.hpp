#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fslab {

// Simple undirected graph on {0..n-1}. No loops, no parallel edges.
// Immutable once built; all algorithms treat it as read-only.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v);  // throws on loops, duplicates, range errors
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // All edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;

private:
    int n_;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<uint64_t>> bits_;
};

struct NamedGraphSpec {
    enum class Kind { Cycle, CompleteBipartite, Star, StarPlus, Complete, Theta };
    Kind kind;
    int a = 0;  // primary size parameter
    int b = 0;  // second part size for CompleteBipartite

    static NamedGraphSpec cycle(int n);
    static NamedGraphSpec complete_bipartite(int s, int t);  // normalized s <= t
    static NamedGraphSpec star(int n);
    static NamedGraphSpec star_plus(int n);
    static NamedGraphSpec complete(int n);
    static NamedGraphSpec theta();

    // CLI grammar: "cycle:9", "kbip:2,7", "star:8", "starplus:8",
    // "complete:6", "theta".
    static std::optional<NamedGraphSpec> parse(const std::string& text);
};

// Canonical labeled graph for a spec. K_{s,t} uses bipartition
// {0..s-1} and {s..n-1}; Theta is the hexagon 0-1-2-3-4-5-0 with
// apex 6 adjacent to 0 and 3.
Graph build_named(const NamedGraphSpec& spec);

// Edge-list text format: "n m" header, then m lines "u v" with u < v.
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

// Standard graph6 format, n <= 62.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// Named spec string, or a path to an edge-list / graph6 file.
Graph load_graph(const std::string& spec_or_path);

}  // namespace fslab
