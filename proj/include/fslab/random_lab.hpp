#pragma once

#include <cstdint>
#include <vector>

#include "fslab/fs_graph.hpp"
#include "fslab/graph.hpp"

namespace fslab {

enum class DecisionMode { Predicate, Oracle };

struct SweepConfig {
    int n = 0;
    int k = 2;
    std::vector<double> p_grid;  // ascending
    int trials = 1;
    uint64_t seed = 0;
    DecisionMode mode = DecisionMode::Predicate;
    int threads = 1;
    int max_n = kFsDefaultMaxN;  // Oracle-mode size cap
};

struct SweepPoint {
    double p = 0;
    int trials = 0;
    int connected = 0;
    int disconnected = 0;
    int unknown = 0;
    double estimate = 0;   // connected / trials
    double std_error = 0;  // sqrt(est * (1 - est) / trials)
};

struct SweepResult {
    std::vector<SweepPoint> points;
};

// Counter-based stream id for (p-index, trial); execution-order independent.
uint64_t sweep_stream(uint64_t seed, int p_index, int trial);

// G(n,p) with every edge decided by a counter-based hash of (stream, edge
// index): the same stream always yields the same graph.
Graph sample_gnp(int n, double p, uint64_t stream);

// Monte-Carlo estimate of Pr[FS(K_{k,n-k}, G(n,p)) connected] per grid
// point. Predicate mode uses the theorem predicates (exact for k <= 2,
// Unknown possible for k >= 3); Oracle mode runs the exhaustive search.
// Bit-identical results for a fixed config regardless of thread count.
SweepResult sweep(const SweepConfig& cfg);

}  // namespace fslab
