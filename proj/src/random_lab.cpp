#include "fslab/random_lab.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "fslab/errors.hpp"
#include "fslab/theorems.hpp"

namespace fslab {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double to_unit(uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

Verdict decide(const SweepConfig& cfg, const Graph& x, const Graph& y) {
    if (cfg.mode == DecisionMode::Oracle)
        return fs_is_connected(x, y, cfg.max_n) ? Verdict::Connected : Verdict::Disconnected;
    if (cfg.k == 1) return predict_star(y).verdict;
    if (cfg.k == 2) return predict_k2(y).verdict;
    return predict_kk(y, cfg.k).verdict;
}

}  // namespace

uint64_t sweep_stream(uint64_t seed, int p_index, int trial) {
    return splitmix64(splitmix64(seed ^ (static_cast<uint64_t>(p_index) << 32)) +
                      static_cast<uint64_t>(trial));
}

Graph sample_gnp(int n, double p, uint64_t stream) {
    if (n < 1 || p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: bad parameters");
    Graph g(n);
    uint64_t edge = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++edge)
            if (to_unit(splitmix64(stream ^ (edge * 0xA24BAED4963EE407ULL))) < p) g.add_edge(u, v);
    return g;
}

SweepResult sweep(const SweepConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    if (cfg.k < 1 || (cfg.k == 1 ? cfg.n < 3 : cfg.n < 2 * cfg.k))
        throw std::invalid_argument("sweep: requires n >= 2k (n >= 3 for k = 1)");
    for (size_t i = 0; i < cfg.p_grid.size(); ++i) {
        double p = cfg.p_grid[i];
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("sweep: probability out of [0,1]");
        if (i > 0 && cfg.p_grid[i - 1] > p)
            throw std::invalid_argument("sweep: p-grid must be ascending");
    }
    if (cfg.mode == DecisionMode::Oracle && cfg.n > cfg.max_n)
        throw InstanceTooLarge("sweep: oracle mode beyond the n<=" + std::to_string(cfg.max_n) +
                               " cap");

    Graph x = cfg.k == 1 ? build_named(NamedGraphSpec::star(cfg.n))
                         : build_named(NamedGraphSpec::complete_bipartite(cfg.k, cfg.n - cfg.k));
    int points = static_cast<int>(cfg.p_grid.size());
    int total = points * cfg.trials;
    std::vector<Verdict> verdicts(total, Verdict::Unknown);

    auto work = [&](int idx) {
        int pi = idx / cfg.trials;
        int trial = idx % cfg.trials;
        Graph y = sample_gnp(cfg.n, cfg.p_grid[pi], sweep_stream(cfg.seed, pi, trial));
        verdicts[idx] = decide(cfg, x, y);
    };
    if (cfg.threads <= 1 || total <= 1) {
        for (int i = 0; i < total; ++i) work(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min(cfg.threads, total); ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) work(i);
            });
        for (auto& th : pool) th.join();
    }

    SweepResult result;
    for (int pi = 0; pi < points; ++pi) {
        SweepPoint pt;
        pt.p = cfg.p_grid[pi];
        pt.trials = cfg.trials;
        for (int trial = 0; trial < cfg.trials; ++trial) {
            switch (verdicts[pi * cfg.trials + trial]) {
                case Verdict::Connected: ++pt.connected; break;
                case Verdict::Disconnected: ++pt.disconnected; break;
                default: ++pt.unknown; break;
            }
        }
        pt.estimate = static_cast<double>(pt.connected) / pt.trials;
        pt.std_error = std::sqrt(pt.estimate * (1.0 - pt.estimate) / pt.trials);
        result.points.push_back(pt);
    }
    return result;
}

}  // namespace fslab
