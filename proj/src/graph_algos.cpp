#include "fslab/graph_algos.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace fslab {

namespace {

std::vector<int> bfs_order_from(const Graph& g, int start) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[start] = 0;
    q.push(start);
    std::vector<int> seen{start};
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                seen.push_back(w);
                q.push(w);
            }
        }
    }
    return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
    return static_cast<int>(bfs_order_from(g, 0).size()) == g.order();
}

BipartiteResult is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    // Closed odd walk: v up to root, root down to w, edge w-v.
                    std::vector<int> up;
                    for (int a = v; a >= 0; a = parent[a]) up.push_back(a);
                    std::vector<int> down;
                    for (int a = w; a >= 0; a = parent[a]) down.push_back(a);
                    std::reverse(down.begin(), down.end());
                    std::vector<int> walk(up.begin(), up.end());
                    walk.insert(walk.end(), down.begin() + 1, down.end());
                    return {false, {}, walk};
                }
            }
        }
    }
    return {true, color, {}};
}

namespace {

// Unit-capacity max flow on the vertex-split digraph, stopping once the
// flow reaches `cap`. Node 2v = in, 2v+1 = out.
int vertex_flow(const Graph& g, int s, int t, int cap) {
    int n = g.order();
    struct Arc {
        int to;
        int flow;
        int capacity;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(2 * n);
    auto add_arc = [&](int a, int b, int c) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, 0, c});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0, 0});
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, v == s || v == t ? n : 1);
    for (auto [u, v] : g.edges()) {
        add_arc(2 * u + 1, 2 * v, n);
        add_arc(2 * v + 1, 2 * u, n);
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    std::vector<int> pred(2 * n);
    while (flow < cap) {
        std::fill(pred.begin(), pred.end(), -1);
        std::queue<int> q;
        q.push(source);
        pred[source] = -2;
        while (!q.empty() && pred[sink] < 0) {
            int a = q.front();
            q.pop();
            for (int idx : out[a]) {
                const Arc& arc = arcs[idx];
                if (arc.flow < arc.capacity && pred[arc.to] < 0) {
                    pred[arc.to] = idx;
                    q.push(arc.to);
                }
            }
        }
        if (pred[sink] < 0) break;
        for (int node = sink; node != source;) {
            int idx = pred[node];
            arcs[idx].flow += 1;
            arcs[idx ^ 1].flow -= 1;
            node = arcs[idx ^ 1].to;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n == 1) return 0;
    if (!is_connected(g)) return 0;
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, vertex_flow(g, s, t, best));
    return best;
}

namespace {

void bridge_dfs(const Graph& g, int v, int parent_edge, int& timer, std::vector<int>& tin,
                std::vector<int>& low, std::vector<std::pair<int, int>>& found) {
    tin[v] = low[v] = timer++;
    for (int w : g.neighbors(v)) {
        if (w == parent_edge) {
            parent_edge = -1;  // skip the tree edge once; parallel edges don't exist
            continue;
        }
        if (tin[w] >= 0) {
            low[v] = std::min(low[v], tin[w]);
        } else {
            bridge_dfs(g, w, v, timer, tin, low, found);
            low[v] = std::min(low[v], low[w]);
            if (low[w] > tin[v]) found.emplace_back(std::min(v, w), std::max(v, w));
        }
    }
}

}  // namespace

std::vector<std::pair<int, int>> bridges(const Graph& g) {
    int n = g.order();
    std::vector<int> tin(n, -1), low(n, -1);
    std::vector<std::pair<int, int>> found;
    int timer = 0;
    for (int v = 0; v < n; ++v)
        if (tin[v] < 0) bridge_dfs(g, v, -1, timer, tin, low, found);
    std::sort(found.begin(), found.end());
    return found;
}

namespace {

bool extend_bridge_path(const Graph& g, const std::vector<std::vector<char>>& is_bridge, int k,
                        std::vector<int>& path, std::vector<char>& used) {
    if (static_cast<int>(path.size()) == k) return g.degree(path.back()) >= 2;
    for (int w : g.neighbors(path.back())) {
        if (used[w]) continue;
        if (!is_bridge[path.back()][w]) continue;
        bool internal = static_cast<int>(path.size()) < k - 1;
        if (internal && g.degree(w) != 2) continue;
        path.push_back(w);
        used[w] = 1;
        if (extend_bridge_path(g, is_bridge, k, path, used)) return true;
        used[w] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_nontrivial_k_bridge(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("k-bridge needs k >= 2");
    if (!is_connected(g)) throw std::invalid_argument("k-bridge is defined inside a connected graph");
    int n = g.order();
    std::vector<std::vector<char>> is_bridge(n, std::vector<char>(n, 0));
    for (auto [u, v] : bridges(g)) is_bridge[u][v] = is_bridge[v][u] = 1;
    for (int v1 = 0; v1 < n; ++v1) {
        if (g.degree(v1) < 2) continue;
        std::vector<int> path{v1};
        std::vector<char> used(n, 0);
        used[v1] = 1;
        if (extend_bridge_path(g, is_bridge, k, path, used)) return path;
    }
    return std::nullopt;
}

namespace {

// Length of the shortest odd closed walk (equals shortest odd cycle length),
// via BFS on the bipartite double cover.
int shortest_odd_cycle_length(const Graph& g) {
    int n = g.order();
    int best = -1;
    for (int s = 0; s < n; ++s) {
        std::vector<std::array<int, 2>> dist(n, {-1, -1});
        std::queue<std::pair<int, int>> q;
        dist[s][0] = 0;
        q.push({s, 0});
        while (!q.empty()) {
            auto [v, par] = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w][1 - par] < 0) {
                    dist[w][1 - par] = dist[v][par] + 1;
                    q.push({w, 1 - par});
                }
            }
        }
        if (dist[s][1] >= 0 && (best < 0 || dist[s][1] < best)) best = dist[s][1];
    }
    return best;
}

bool extend_cycle(const Graph& g, int start, int length, std::vector<int>& path,
                  std::vector<char>& used) {
    if (static_cast<int>(path.size()) == length)
        return g.has_edge(path.back(), start);
    for (int w : g.neighbors(path.back())) {
        if (w <= start || used[w]) continue;
        path.push_back(w);
        used[w] = 1;
        if (extend_cycle(g, start, length, path, used)) return true;
        used[w] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g) {
    int length = shortest_odd_cycle_length(g);
    if (length < 0) return std::nullopt;
    int n = g.order();
    for (int start = 0; start < n; ++start) {
        std::vector<int> path{start};
        std::vector<char> used(n, 0);
        used[start] = 1;
        if (extend_cycle(g, start, length, path, used)) return path;
    }
    return std::nullopt;  // unreachable: length was found above
}

std::optional<std::vector<int>> shortest_cycle_through_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("shortest_cycle_through_edge: not an edge");
    int n = g.order();
    // BFS distances to v avoiding the edge (u, v) itself.
    std::vector<int> dist(n, -1);
    dist[v] = 0;
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : g.neighbors(a)) {
            if ((a == v && b == u) || (a == u && b == v)) continue;
            if (dist[b] < 0) {
                dist[b] = dist[a] + 1;
                q.push(b);
            }
        }
    }
    if (dist[u] < 0) return std::nullopt;
    // Greedy lexicographically smallest shortest path u -> v. The removed
    // edge cannot be picked: dist[u] >= 2 in a simple graph.
    std::vector<int> cycle{u};
    int cur = u;
    while (cur != v) {
        for (int b : g.neighbors(cur)) {
            if (dist[b] == dist[cur] - 1) {
                cycle.push_back(b);
                cur = b;
                break;
            }
        }
    }
    return cycle;
}

bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

uint64_t canonical_mask(const Graph& g) {
    int n = g.order();
    if (n > 8) throw std::invalid_argument("canonical_mask: only n <= 8 supported");
    std::vector<int> adj_bits(n, 0);
    for (auto [u, v] : g.edges()) {
        adj_bits[u] |= 1 << v;
        adj_bits[v] |= 1 << u;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t mask = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                mask = (mask << 1) | ((adj_bits[perm[i]] >> perm[j]) & 1);
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool is_theta(const Graph& g) {
    static const uint64_t theta_mask = canonical_mask(build_named(NamedGraphSpec::theta()));
    if (g.order() != 7 || g.edge_count() != 8) return false;
    return canonical_mask(g) == theta_mask;
}

}  // namespace fslab
