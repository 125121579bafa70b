#include "fslab/fs_graph.hpp"

#include <atomic>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "fslab/errors.hpp"

namespace fslab {

uint64_t ComponentReport::total_states() const {
    return std::accumulate(sizes.begin(), sizes.end(), uint64_t{0});
}

namespace {

void check_instance(const Graph& x, const Graph& y, int max_n) {
    if (x.order() != y.order())
        throw std::invalid_argument("FS(X,Y) requires |V(X)| = |V(Y)|");
    if (max_n > kFsHardMaxN)
        throw std::invalid_argument("instance cap beyond n=12 is not supported");
    if (x.order() > max_n)
        throw InstanceTooLarge("FS instance with n=" + std::to_string(x.order()) +
                               " exceeds the configured cap n<=" + std::to_string(max_n));
}

// Neighbor ranks of the bijection with the given rank, appended to `out`.
void neighbor_ranks(const Graph& y, const std::vector<std::pair<int, int>>& x_edges, int n,
                    uint64_t rank, std::vector<uint64_t>& out) {
    Bijection sigma = unrank_perm(rank, n);
    for (auto [a, b] : x_edges) {
        if (y.has_edge(sigma[a], sigma[b])) {
            apply_swap(sigma, a, b);
            out.push_back(rank_perm(sigma));
            apply_swap(sigma, a, b);
        }
    }
}

class VisitedSet {
public:
    explicit VisitedSet(uint64_t bits)
        : words_((bits + 63) / 64), data_(new std::atomic<uint64_t>[words_]) {
        for (uint64_t i = 0; i < words_; ++i) data_[i].store(0, std::memory_order_relaxed);
    }

    // True when this call claimed the bit.
    bool claim(uint64_t idx) {
        uint64_t mask = uint64_t{1} << (idx % 64);
        uint64_t prev = data_[idx / 64].fetch_or(mask, std::memory_order_relaxed);
        return (prev & mask) == 0;
    }

    bool test(uint64_t idx) const {
        return (data_[idx / 64].load(std::memory_order_relaxed) >> (idx % 64)) & 1;
    }

    // Lowest unset bit at or after `from`, or `limit` when all set.
    uint64_t next_unset(uint64_t from, uint64_t limit) const {
        for (uint64_t idx = from; idx < limit; ++idx) {
            if (idx % 64 == 0) {
                while (idx + 64 <= limit && data_[idx / 64].load(std::memory_order_relaxed) ==
                                                ~uint64_t{0})
                    idx += 64;
                if (idx >= limit) return limit;
            }
            if (!test(idx)) return idx;
        }
        return limit;
    }

private:
    uint64_t words_;
    std::unique_ptr<std::atomic<uint64_t>[]> data_;
};

// One BFS level expanded across `threads` workers. Returns states claimed.
uint64_t expand_level(const Graph& y, const std::vector<std::pair<int, int>>& x_edges, int n,
                      VisitedSet& visited, const std::vector<uint64_t>& frontier,
                      std::vector<uint64_t>& next, int threads) {
    next.clear();
    if (threads <= 1 || frontier.size() < 256) {
        std::vector<uint64_t> candidates;
        for (uint64_t rank : frontier) {
            candidates.clear();
            neighbor_ranks(y, x_edges, n, rank, candidates);
            for (uint64_t c : candidates)
                if (visited.claim(c)) next.push_back(c);
        }
        return next.size();
    }
    std::vector<std::vector<uint64_t>> local(threads);
    std::vector<std::thread> pool;
    size_t chunk = (frontier.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        size_t begin = t * chunk;
        size_t end = std::min(frontier.size(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, t, begin, end] {
            std::vector<uint64_t> candidates;
            for (size_t i = begin; i < end; ++i) {
                candidates.clear();
                neighbor_ranks(y, x_edges, n, frontier[i], candidates);
                for (uint64_t c : candidates)
                    if (visited.claim(c)) local[t].push_back(c);
            }
        });
    }
    for (auto& th : pool) th.join();
    uint64_t claimed = 0;
    for (auto& part : local) {
        claimed += part.size();
        next.insert(next.end(), part.begin(), part.end());
    }
    return claimed;
}

}  // namespace

std::vector<Bijection> fs_neighbors(const Graph& x, const Graph& y, const Bijection& sigma) {
    if (x.order() != y.order())
        throw std::invalid_argument("FS(X,Y) requires |V(X)| = |V(Y)|");
    if (static_cast<int>(sigma.size()) != x.order() || !is_permutation(sigma))
        throw std::invalid_argument("fs_neighbors: sigma is not a bijection on V(X)");
    std::vector<Bijection> result;
    for (auto [a, b] : x.edges()) {
        if (y.has_edge(sigma[a], sigma[b])) {
            Bijection next = sigma;
            apply_swap(next, a, b);
            result.push_back(std::move(next));
        }
    }
    return result;
}

ComponentReport fs_components(const Graph& x, const Graph& y, int threads, int max_n) {
    check_instance(x, y, max_n);
    int n = x.order();
    uint64_t total = factorial(n);
    auto x_edges = x.edges();

    VisitedSet visited(total);
    ComponentReport report;
    report.n = n;

    std::vector<uint64_t> frontier, next;
    uint64_t seed = 0;
    while ((seed = visited.next_unset(seed, total)) < total) {
        visited.claim(seed);
        uint64_t size = 1;
        frontier.assign(1, seed);
        while (!frontier.empty()) {
            size += expand_level(y, x_edges, n, visited, frontier, next, threads);
            frontier.swap(next);
        }
        report.sizes.push_back(size);
        report.representatives.push_back(seed);
    }
    report.component_count = static_cast<int>(report.sizes.size());
    return report;
}

bool fs_is_connected(const Graph& x, const Graph& y, int max_n) {
    check_instance(x, y, max_n);
    int n = x.order();
    uint64_t total = factorial(n);
    auto x_edges = x.edges();

    VisitedSet visited(total);
    visited.claim(0);
    uint64_t seen = 1;
    std::vector<uint64_t> frontier{0}, next;
    while (!frontier.empty() && seen < total) {
        seen += expand_level(y, x_edges, n, visited, frontier, next, 1);
        frontier.swap(next);
    }
    return seen == total;
}

std::optional<SwapSequence> fs_path(const Graph& x, const Graph& y, const Bijection& from,
                                    const Bijection& to, int max_n) {
    check_instance(x, y, max_n);
    if (static_cast<int>(from.size()) != x.order() || static_cast<int>(to.size()) != x.order() ||
        !is_permutation(from) || !is_permutation(to))
        throw std::invalid_argument("fs_path: endpoints must be bijections on V(X)");
    int n = x.order();
    uint64_t total = factorial(n);
    auto x_edges = x.edges();
    uint64_t start = rank_perm(from);
    uint64_t goal = rank_perm(to);
    if (start == goal) return SwapSequence{};

    VisitedSet visited(total);
    // Index of the x-edge whose swap discovered each rank.
    std::vector<uint16_t> pred_edge(total, 0xFFFF);
    visited.claim(start);
    std::vector<uint64_t> frontier{start}, next;
    bool found = false;
    while (!frontier.empty() && !found) {
        next.clear();
        for (uint64_t rank : frontier) {
            Bijection sigma = unrank_perm(rank, n);
            for (size_t e = 0; e < x_edges.size() && !found; ++e) {
                auto [a, b] = x_edges[e];
                if (!y.has_edge(sigma[a], sigma[b])) continue;
                apply_swap(sigma, a, b);
                uint64_t r2 = rank_perm(sigma);
                apply_swap(sigma, a, b);
                if (visited.claim(r2)) {
                    pred_edge[r2] = static_cast<uint16_t>(e);
                    next.push_back(r2);
                    if (r2 == goal) found = true;
                }
            }
            if (found) break;
        }
        frontier.swap(next);
    }
    if (!found) return std::nullopt;

    SwapSequence seq;
    Bijection sigma = to;
    uint64_t rank = goal;
    while (rank != start) {
        auto [a, b] = x_edges[pred_edge[rank]];
        seq.push(a, b);
        apply_swap(sigma, a, b);  // swaps are involutions
        rank = rank_perm(sigma);
    }
    return seq.reversed();
}

}  // namespace fslab
