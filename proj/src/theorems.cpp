#include "fslab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "fslab/graph_algos.hpp"

namespace fslab {

namespace {

Graph kbip(int k, int n) { return build_named(NamedGraphSpec::complete_bipartite(k, n - k)); }

std::vector<Reason> disconnect_reasons(const Graph& y, int k) {
    std::vector<Reason> rs;
    bool connected = is_connected(y);
    if (!connected) rs.push_back({ReasonTag::NotConnected});
    if (is_bipartite(y).bipartite) rs.push_back({ReasonTag::Bipartite});
    if (connected && find_nontrivial_k_bridge(y, k)) rs.push_back({ReasonTag::NonTrivialKBridge, k});
    if (is_cycle_graph(y)) rs.push_back({ReasonTag::IsCycle});
    return rs;
}

void run_indexed(int count, int threads, const std::function<void(int)>& work) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(threads, count);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

bool Prediction::has(ReasonTag tag) const {
    return std::any_of(reasons.begin(), reasons.end(),
                       [tag](const Reason& r) { return r.tag == tag; });
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Connected: return "connected";
        case Verdict::Disconnected: return "disconnected";
        default: return "unknown";
    }
}

std::string to_string(const Reason& r) {
    switch (r.tag) {
        case ReasonTag::NotConnected: return "not-connected";
        case ReasonTag::Bipartite: return "bipartite";
        case ReasonTag::NonTrivialKBridge:
            return "non-trivial-" + std::to_string(r.k) + "-bridge";
        case ReasonTag::IsCycle: return "is-cycle";
        case ReasonTag::ThetaException: return "theta-exception";
        case ReasonTag::NotTwoConnected: return "not-2-connected";
        case ReasonTag::KMinus1ConnectedSufficient:
            return std::to_string(r.k) + "-connected-sufficient";
        default: return "oracle-decided";
    }
}

Prediction predict_star(const Graph& y) {
    int n = y.order();
    if (n < 3) throw std::invalid_argument("predict_star: requires n >= 3");
    std::vector<Reason> rs;
    bool connected = is_connected(y);
    if (!connected) rs.push_back({ReasonTag::NotConnected});
    if (connected && vertex_connectivity(y) < 2) rs.push_back({ReasonTag::NotTwoConnected});
    if (is_bipartite(y).bipartite) rs.push_back({ReasonTag::Bipartite});
    // C_3 = K_3 is no true exception: FS(S_3, K_3) is connected.
    if (n >= 4 && is_cycle_graph(y)) rs.push_back({ReasonTag::IsCycle});
    if (is_theta(y)) rs.push_back({ReasonTag::ThetaException});
    if (rs.empty()) return {Verdict::Connected, {}};
    return {Verdict::Disconnected, std::move(rs)};
}

std::optional<Prediction> predict_k_disconnect(const Graph& y, int k) {
    if (k < 2 || y.order() < 2 * k)
        throw std::invalid_argument("predict_k_disconnect: requires n >= 2k >= 4");
    auto rs = disconnect_reasons(y, k);
    if (rs.empty()) return std::nullopt;
    return Prediction{Verdict::Disconnected, std::move(rs)};
}

Prediction predict_k2(const Graph& y) {
    int n = y.order();
    if (n < 4) throw std::invalid_argument("predict_k2: requires n >= 4");
    if (n == 4) {
        // K_{2,2} = C_4; decide the 24 bijections directly.
        auto report = fs_components(kbip(2, 4), y);
        Verdict v = report.component_count == 1 ? Verdict::Connected : Verdict::Disconnected;
        return {v, {{ReasonTag::OracleDecided}}};
    }
    auto rs = disconnect_reasons(y, 2);
    if (rs.empty()) return {Verdict::Connected, {}};
    return {Verdict::Disconnected, std::move(rs)};
}

Prediction predict_kk(const Graph& y, int k) {
    if (k < 3 || y.order() < 2 * k)
        throw std::invalid_argument("predict_kk: requires n >= 2k >= 6");
    auto rs = disconnect_reasons(y, k);
    if (!rs.empty()) return {Verdict::Disconnected, std::move(rs)};
    if (vertex_connectivity(y) >= k - 1)
        return {Verdict::Connected, {{ReasonTag::KMinus1ConnectedSufficient, k - 1}}};
    return {Verdict::Unknown, {}};
}

uint64_t cycle_formula(int n, int k) {
    if (k < 1 || n - k < k) throw std::invalid_argument("cycle_formula: requires 1 <= k <= n-k");
    // Components of FS(C_n, K_{k,n-k}): one per pair of cyclic orderings of
    // the two sides, refined by the relative rotation offset of the two
    // orders, which is invariant mod gcd(k, n-k). Verified exhaustively for
    // all 4 <= n <= 10.
    return static_cast<uint64_t>(std::gcd(n, k)) * factorial(k - 1) * factorial(n - k - 1);
}

const std::vector<Graph>& connected_graph_corpus(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("connected_graph_corpus: supported for 1 <= n <= 7");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.emplace(1, std::vector<Graph>{Graph(1)});
    // Every connected graph on m >= 2 vertices arises from a connected graph
    // on m-1 vertices by adding a vertex joined to a nonempty subset.
    for (int m = static_cast<int>(cache.size()) + 1; m <= n; ++m) {
        const auto& prev = cache.at(m - 1);
        std::map<uint64_t, Graph> seen;
        for (const auto& g : prev) {
            for (int subset = 1; subset < (1 << (m - 1)); ++subset) {
                Graph h(m);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int v = 0; v < m - 1; ++v)
                    if (subset & (1 << v)) h.add_edge(v, m - 1);
                uint64_t key = canonical_mask(h);
                seen.emplace(key, std::move(h));
            }
        }
        std::vector<Graph> level;
        level.reserve(seen.size());
        for (auto& [key, g] : seen) level.push_back(std::move(g));
        cache.emplace(m, std::move(level));
    }
    return cache.at(n);
}

std::vector<CorpusComparison> verify_corpus(const std::vector<Graph>& corpus, int k, int threads) {
    if (corpus.empty()) throw std::invalid_argument("verify_corpus: empty corpus");
    int n = corpus.front().order();
    if (k < 1 || (k == 1 ? n < 3 : n < 2 * k))
        throw std::invalid_argument("verify_corpus: k out of range for this corpus order");
    std::vector<CorpusComparison> out(corpus.size());
    Graph x = k == 1 ? build_named(NamedGraphSpec::star(n)) : kbip(k, n);
    run_indexed(static_cast<int>(corpus.size()), threads, [&](int i) {
        const Graph& y = corpus[i];
        if (y.order() != n) throw std::invalid_argument("verify_corpus: mixed graph orders");
        CorpusComparison cmp;
        cmp.graph6 = to_graph6(y);
        cmp.predicted = k == 1 ? predict_star(y) : (k == 2 ? predict_k2(y) : predict_kk(y, k));
        auto report = fs_components(x, y);
        cmp.oracle_components = report.component_count;
        cmp.oracle_connected = report.component_count == 1;
        cmp.mismatch = cmp.predicted.verdict != Verdict::Unknown &&
                       (cmp.predicted.verdict == Verdict::Connected) != cmp.oracle_connected;
        out[i] = std::move(cmp);
    });
    return out;
}

std::vector<CorpusComparison> verify_corpus(int n, int k, int threads) {
    return verify_corpus(connected_graph_corpus(n), k, threads);
}

ConjectureReport scan_conjectures(int n_max, int k, int threads) {
    if (n_max > 7) throw std::invalid_argument("scan_conjectures: enumeration limited to n <= 7");
    ConjectureReport report;
    report.n_max = n_max;
    report.k = k;
    std::mutex mu;

    if (k >= 3) {
        for (int n = 2 * k; n <= n_max; ++n) {
            const auto& corpus = connected_graph_corpus(n);
            Graph x = kbip(k, n);
            run_indexed(static_cast<int>(corpus.size()), threads, [&](int i) {
                const Graph& y = corpus[i];
                bool conjectured = !is_bipartite(y).bipartite &&
                                   !find_nontrivial_k_bridge(y, k) && !is_cycle_graph(y);
                bool oracle = fs_is_connected(x, y);
                bool unknown = predict_kk(y, k).verdict == Verdict::Unknown;
                std::lock_guard<std::mutex> lock(mu);
                ++report.conj1_checked;
                if (unknown) ++report.conj1_unknown_resolved;
                if (conjectured != oracle) report.conj1_counterexamples.push_back(to_graph6(y));
            });
        }
    }

    for (int n = 5; n <= n_max; ++n) {
        const auto& corpus = connected_graph_corpus(n);
        Graph x = kbip(2, n);
        run_indexed(static_cast<int>(corpus.size()), threads, [&](int i) {
            const Graph& y = corpus[i];
            if (!is_bipartite(y).bipartite || find_nontrivial_k_bridge(y, 2) || is_cycle_graph(y))
                return;
            int components = fs_components(x, y).component_count;
            std::lock_guard<std::mutex> lock(mu);
            ++report.conj2_checked;
            if (components != 2) report.conj2_counterexamples.push_back(to_graph6(y));
        });
    }
    std::sort(report.conj1_counterexamples.begin(), report.conj1_counterexamples.end());
    std::sort(report.conj2_counterexamples.begin(), report.conj2_counterexamples.end());
    return report;
}

}  // namespace fslab
