#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fslab/fs_graph.hpp"
#include "fslab/graph.hpp"

namespace fslab {

enum class Verdict { Connected, Disconnected, Unknown };

enum class ReasonTag {
    NotConnected,
    Bipartite,
    NonTrivialKBridge,
    IsCycle,
    ThetaException,
    NotTwoConnected,
    KMinus1ConnectedSufficient,
    OracleDecided,
};

struct Reason {
    ReasonTag tag;
    int k = 0;  // parameter for NonTrivialKBridge / KMinus1ConnectedSufficient
    bool operator==(const Reason&) const = default;
};

struct Prediction {
    Verdict verdict = Verdict::Unknown;
    std::vector<Reason> reasons;

    bool has(ReasonTag tag) const;
};

std::string to_string(Verdict v);
std::string to_string(const Reason& r);

// FS(S_n, Y): exact via Wilson's characterization; never Unknown. n >= 3.
Prediction predict_star(const Graph& y);

// FS(K_{k,n-k}, Y) disconnection conditions, k >= 2, n >= 2k; nothing when
// none of them fires.
std::optional<Prediction> predict_k_disconnect(const Graph& y, int k);

// FS(K_{2,n-2}, Y): exact characterization, n >= 4; never Unknown.
// n = 4 is decided by brute force over the 24 bijections of FS(C_4, Y).
Prediction predict_k2(const Graph& y);

// FS(K_{k,n-k}, Y), k >= 3: Connected under the sufficient condition,
// Disconnected under predict_k_disconnect, Unknown in the gap between them.
Prediction predict_kk(const Graph& y, int k);

// Component count of FS(C_n, K_{k,n-k}): gcd(n,k) * (k-1)! * (n-k-1)!.
// The gcd factor refines the pair-of-cyclic-orderings count; see README.
uint64_t cycle_formula(int n, int k);

// All connected graphs on n vertices up to isomorphism, n <= 7, generated
// by vertex augmentation with canonical-form deduplication. Cached;
// deterministic order (ascending canonical mask).
const std::vector<Graph>& connected_graph_corpus(int n);

struct CorpusComparison {
    std::string graph6;
    Prediction predicted;
    bool oracle_connected = false;
    int oracle_components = 0;
    // True when a non-Unknown verdict contradicts the oracle.
    bool mismatch = false;
};

// Prediction-vs-oracle comparison of FS(K_{k,n-k}, y) over a corpus.
// k = 1 uses predict_star, k = 2 predict_k2, k >= 3 predict_kk.
// Parallel across graphs; result order is the corpus order.
std::vector<CorpusComparison> verify_corpus(const std::vector<Graph>& corpus, int k,
                                            int threads = 1);
std::vector<CorpusComparison> verify_corpus(int n, int k, int threads = 1);

struct ConjectureReport {
    int n_max = 0;
    int k = 0;
    // Conjecture 1 (k >= 3): connected iff connected, non-bipartite, no
    // non-trivial k-bridge, not C_n.
    uint64_t conj1_checked = 0;
    uint64_t conj1_unknown_resolved = 0;
    std::vector<std::string> conj1_counterexamples;
    // Conjecture 2: bipartite, connected, no non-trivial cut edge, not C_n
    // implies FS(K_{2,n-2}, y) has exactly 2 components.
    uint64_t conj2_checked = 0;
    std::vector<std::string> conj2_counterexamples;
};

ConjectureReport scan_conjectures(int n_max, int k, int threads = 1);

}  // namespace fslab
