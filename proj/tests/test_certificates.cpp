#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fslab/certificates.hpp"
#include "fslab/errors.hpp"
#include "fslab/fs_graph.hpp"
#include "fslab/graph.hpp"
#include "fslab/graph_algos.hpp"
#include "oracle.hpp"

using namespace fslab;

namespace {

Graph kbip(int k, int n) { return build_named(NamedGraphSpec::complete_bipartite(k, n - k)); }

// K_{2,t-2} with small side {0,1}, valid even for t = 3 (where the named
// constructor would normalize the parts the other way).
Graph y_small2(int t) {
    Graph y(t);
    for (int s = 0; s < 2; ++s)
        for (int b = 2; b < t; ++b) y.add_edge(s, b);
    return y;
}

// Random bijection placing token u at a and token v at b for a random
// oriented x-edge (a, b).
Bijection random_adjacent_placement(const Graph& x, int u, int v, std::mt19937& rng) {
    int n = x.order();
    Bijection sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    auto es = x.edges();
    auto [a, b] = es[rng() % es.size()];
    if (rng() & 1) std::swap(a, b);
    std::swap(sigma[a], sigma[position_of(sigma, u)]);
    std::swap(sigma[b], sigma[position_of(sigma, v)]);
    if (sigma[a] != u) std::swap(sigma[a], sigma[position_of(sigma, u)]);
    return sigma;
}

void check_exchange(const Graph& x, const Graph& y, const Bijection& sigma, int u, int v,
                    const SwapSequence& seq) {
    auto res = validate_sequence(x, y, sigma, seq, swap_tokens(sigma, u, v));
    INFO("graph ", to_graph6(x), " sigma rank ", rank_perm(sigma), ": ", res.message);
    CHECK(res.ok);
}

}  // namespace

TEST_CASE("validator accepts legal walks and pinpoints violations") {
    Graph x = build_named(NamedGraphSpec::cycle(4));
    Graph y = kbip(2, 4);
    Bijection id = identity_perm(4);

    CHECK(validate_sequence(x, y, id, {}, id).ok);

    SwapSequence good;
    good.push(1, 2);  // tokens 1,2: opposite sides, cycle edge
    CHECK(validate_sequence(x, y, id, good, swap_tokens(id, 1, 2)).ok);

    SwapSequence bad_edge;
    bad_edge.push(0, 2);  // not an x-edge
    auto r1 = validate_sequence(x, y, id, bad_edge, id);
    CHECK(!r1.ok);
    CHECK(r1.first_illegal_move == 0);

    SwapSequence bad_tokens;
    bad_tokens.push(0, 1);  // tokens 0,1 both small
    auto r2 = validate_sequence(x, y, id, bad_tokens, id);
    CHECK(!r2.ok);
    CHECK(r2.first_illegal_move == 0);

    SwapSequence legal_wrong_end;
    legal_wrong_end.push(1, 2);
    auto r3 = validate_sequence(x, y, id, legal_wrong_end, id);
    CHECK(!r3.ok);
    CHECK(r3.first_illegal_move == -1);

    SwapSequence second_illegal;
    second_illegal.push(1, 2);
    second_illegal.push(2, 3);  // now tokens 1,3 sit at 2,3? replay decides
    auto r4 = validate_sequence(x, y, id, second_illegal,
                                apply_sequence(id, second_illegal));
    if (!r4.ok) CHECK(r4.first_illegal_move == 1);
}

TEST_CASE("odd cycle exchange: exact shape for t in {3,5,7,9}") {
    std::mt19937 rng(61);
    for (int t : {3, 5, 7, 9}) {
        Graph x = build_named(NamedGraphSpec::cycle(t));
        Graph y = y_small2(t);
        for (int rep = 0; rep < 40; ++rep) {
            Bijection sigma = random_adjacent_placement(x, 0, 1, rng);
            auto seq = odd_cycle_exchange(t, sigma);
            CHECK(seq.size() == t * (t - 2));
            for (auto [a, b] : seq.moves) CHECK(x.has_edge(a, b));
            check_exchange(x, y, sigma, 0, 1, seq);
            // After each full block of t moves the configuration returns to
            // an adjacent placement of the pair, transposed on odd blocks.
            Bijection cur = sigma;
            for (int block = 1; block <= t - 2; ++block) {
                for (int m = 0; m < t; ++m) {
                    auto [a, b] = seq.moves[(block - 1) * t + m];
                    apply_swap(cur, a, b);
                }
                int p0 = position_of(cur, 0), p1 = position_of(cur, 1);
                CHECK(x.has_edge(p0, p1));
            }
        }
    }
    CHECK_THROWS_AS(odd_cycle_exchange(4, identity_perm(4)), std::invalid_argument);
    Bijection apart = {0, 2, 1, 3, 4};  // tokens 0,1 at positions 0,2
    CHECK_THROWS_AS(odd_cycle_exchange(5, apart), std::invalid_argument);
}

TEST_CASE("small-side exchange on the dispatch case examples") {
    std::mt19937 rng(67);
    Graph y5 = kbip(2, 5);

    // Both tokens on the odd cycle.
    Graph c5 = build_named(NamedGraphSpec::cycle(5));
    for (int rep = 0; rep < 20; ++rep) {
        Bijection sigma = random_adjacent_placement(c5, 0, 1, rng);
        check_exchange(c5, y5, sigma, 0, 1, exchange_small_side_k2(c5, sigma));
    }

    // Pendant vertex on K_4: exactly one token on the cycle.
    Graph k4p(5);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4p.add_edge(u, v);
    k4p.add_edge(3, 4);
    Bijection pend = {3, 4, 2, 0, 1};  // token 0 on the clique, token 1 on the pendant
    check_exchange(k4p, y5, pend, 0, 1, exchange_small_side_k2(k4p, pend));

    // Pendant path of length 2 on C_5: neither token on the cycle.
    Graph c5p(7);
    for (int i = 0; i < 5; ++i) c5p.add_edge(i, (i + 1) % 5);
    c5p.add_edge(0, 5);
    c5p.add_edge(5, 6);
    Bijection off = {2, 3, 4, 5, 6, 0, 1};  // tokens 0,1 at positions 5,6
    check_exchange(c5p, kbip(2, 7), off, 0, 1, exchange_small_side_k2(c5p, off));
    Bijection half = {2, 3, 4, 5, 6, 1, 0};  // reversed orientation
    check_exchange(c5p, kbip(2, 7), half, 0, 1, exchange_small_side_k2(c5p, half));
}

TEST_CASE("small-side exchange randomized over the order-5..7 corpus texture") {
    std::mt19937 rng(71);
    int tasks = 0;
    while (tasks < 120) {
        int n = 5 + static_cast<int>(rng() % 3);
        Graph x = oracle::random_connected_graph(n, 0.45, rng);
        if (is_bipartite(x).bipartite) continue;
        Graph y = kbip(2, n);
        Bijection sigma = random_adjacent_placement(x, 0, 1, rng);
        check_exchange(x, y, sigma, 0, 1, exchange_small_side_k2(x, sigma));
        ++tasks;
    }
}

TEST_CASE("small-side exchange rejects bad inputs") {
    Graph c6 = build_named(NamedGraphSpec::cycle(6));
    CHECK_THROWS_AS(exchange_small_side_k2(c6, identity_perm(6)), std::invalid_argument);
    Graph c5 = build_named(NamedGraphSpec::cycle(5));
    Bijection apart = {0, 2, 1, 3, 4};
    CHECK_THROWS_AS(exchange_small_side_k2(c5, apart), std::invalid_argument);
}

TEST_CASE("big-side exchange on the structured examples") {
    std::mt19937 rng(73);

    // K_4 plus an apex attached to one vertex of a triangle.
    Graph k4a(5);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4a.add_edge(u, v);
    k4a.add_edge(3, 4);
    // Not valid: (3,4) is a cut edge but vertex 4 is a leaf, so no
    // non-trivial cut edge; still fine.
    Graph y5 = kbip(2, 5);
    for (int rep = 0; rep < 15; ++rep) {
        Bijection sigma = random_adjacent_placement(k4a, 2, 3, rng);
        check_exchange(k4a, y5, sigma, 2, 3, exchange_big_side_k2(k4a, sigma, 2, 3));
        Bijection sigma2 = random_adjacent_placement(k4a, 3, 4, rng);
        check_exchange(k4a, y5, sigma2, 3, 4, exchange_big_side_k2(k4a, sigma2, 3, 4));
    }

    // Triangular prism.
    Graph prism(6);
    prism.add_edge(0, 1);
    prism.add_edge(1, 2);
    prism.add_edge(0, 2);
    prism.add_edge(3, 4);
    prism.add_edge(4, 5);
    prism.add_edge(3, 5);
    prism.add_edge(0, 3);
    prism.add_edge(1, 4);
    prism.add_edge(2, 5);
    Graph y6 = kbip(2, 6);
    for (int rep = 0; rep < 15; ++rep) {
        int u = 2 + static_cast<int>(rng() % 4);
        int v = 2 + static_cast<int>(rng() % 4);
        if (u == v) continue;
        Bijection sigma = random_adjacent_placement(prism, u, v, rng);
        check_exchange(prism, y6, sigma, u, v, exchange_big_side_k2(prism, sigma, u, v));
    }

    // Wheel on 7 vertices: hub 6, rim C_6.
    Graph wheel(7);
    for (int i = 0; i < 6; ++i) {
        wheel.add_edge(i, (i + 1) % 6);
        wheel.add_edge(i, 6);
    }
    Graph y7 = kbip(2, 7);
    for (int rep = 0; rep < 15; ++rep) {
        Bijection sigma = random_adjacent_placement(wheel, 4, 5, rng);
        check_exchange(wheel, y7, sigma, 4, 5, exchange_big_side_k2(wheel, sigma, 4, 5));
    }
    // Small tokens out on the rim, exchanging pair straddling a spoke.
    Bijection rim = {0, 2, 1, 3, 6, 4, 5};  // token 4 at rim vertex 5, token 5 at the hub
    check_exchange(wheel, y7, rim, 4, 5, exchange_big_side_k2(wheel, rim, 4, 5));
}

TEST_CASE("big-side exchange randomized") {
    std::mt19937 rng(79);
    int tasks = 0;
    while (tasks < 100) {
        int n = 5 + static_cast<int>(rng() % 3);
        Graph x = oracle::random_connected_graph(n, 0.55, rng);
        if (is_bipartite(x).bipartite || is_cycle_graph(x)) continue;
        if (find_nontrivial_k_bridge(x, 2)) continue;
        Graph y = kbip(2, n);
        int u = 2 + static_cast<int>(rng() % (n - 2));
        int v = 2 + static_cast<int>(rng() % (n - 2));
        if (u == v) continue;
        Bijection sigma = random_adjacent_placement(x, u, v, rng);
        check_exchange(x, y, sigma, u, v, exchange_big_side_k2(x, sigma, u, v));
        ++tasks;
    }
}

TEST_CASE("big-side exchange rejects bad inputs") {
    Graph c5 = build_named(NamedGraphSpec::cycle(5));
    Bijection id = identity_perm(5);
    CHECK_THROWS_AS(exchange_big_side_k2(c5, swap_tokens(id, 2, 3), 2, 3), std::invalid_argument);

    // Two triangles joined by an edge: non-trivial cut edge.
    Graph two(6);
    two.add_edge(0, 1);
    two.add_edge(0, 2);
    two.add_edge(1, 2);
    two.add_edge(3, 4);
    two.add_edge(3, 5);
    two.add_edge(4, 5);
    two.add_edge(2, 3);
    Bijection sigma = identity_perm(6);
    std::swap(sigma[0], sigma[2]);  // ensure tokens 2, something adjacent; exact placement moot
    CHECK_THROWS_AS(exchange_big_side_k2(two, sigma, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(exchange_big_side_k2(two, sigma, 1, 3), std::invalid_argument);
}

TEST_CASE("general k exchange on K_{3,3}+e, K_{2,2,2} and random 2-connected graphs") {
    std::mt19937 rng(83);

    Graph k33e(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33e.add_edge(i, j);
    k33e.add_edge(0, 1);
    Graph y33 = kbip(3, 6);
    for (int rep = 0; rep < 20; ++rep) {
        int u = 1 + static_cast<int>(rng() % 2);
        Bijection sigma = random_adjacent_placement(k33e, 0, u, rng);
        check_exchange(k33e, y33, sigma, 0, u, exchange_k_general(k33e, 3, sigma, u));
    }

    // Octahedron K_{2,2,2}: complement of the perfect matching 0-1, 2-3, 4-5.
    Graph oct(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2)) oct.add_edge(u, v);
    for (int rep = 0; rep < 50; ++rep) {
        int u = 1 + static_cast<int>(rng() % 2);
        Bijection sigma = random_adjacent_placement(oct, 0, u, rng);
        check_exchange(oct, y33, sigma, 0, u, exchange_k_general(oct, 3, sigma, u));
    }

    int tasks = 0;
    while (tasks < 80) {
        int n = 6 + static_cast<int>(rng() % 2);
        Graph x = oracle::random_connected_graph(n, 0.5, rng);
        if (is_bipartite(x).bipartite || is_cycle_graph(x)) continue;
        if (vertex_connectivity(x) < 2) continue;
        Graph y = kbip(3, n);
        int u = 1 + static_cast<int>(rng() % 2);
        Bijection sigma = random_adjacent_placement(x, 0, u, rng);
        check_exchange(x, y, sigma, 0, u, exchange_k_general(x, 3, sigma, u));
        ++tasks;
    }
}

TEST_CASE("general k exchange rejects bad inputs") {
    Graph oct(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2)) oct.add_edge(u, v);
    Bijection id = identity_perm(6);
    CHECK_THROWS_AS(exchange_k_general(oct, 3, id, 0), std::invalid_argument);
    CHECK_THROWS_AS(exchange_k_general(oct, 3, id, 3), std::invalid_argument);
    CHECK_THROWS_AS(exchange_k_general(oct, 2, id, 1), std::invalid_argument);
    Graph c6 = build_named(NamedGraphSpec::cycle(6));
    CHECK_THROWS_AS(exchange_k_general(c6, 3, id, 1), std::invalid_argument);
    Graph star = build_named(NamedGraphSpec::star(6));
    CHECK_THROWS_AS(exchange_k_general(star, 3, id, 1), std::invalid_argument);
}

TEST_CASE("cycle navigate") {
    Graph c5 = build_named(NamedGraphSpec::cycle(5));
    Graph y = kbip(2, 5);
    std::vector<int> cyc = {0, 1, 2, 3, 4};
    Bijection id = identity_perm(5);

    auto trivial = cycle_navigate(c5, y, cyc, id, [](const Bijection&) { return true; });
    CHECK(trivial.size() == 0);

    Bijection target = swap_tokens(id, 1, 2);  // one legal cycle move away
    auto one = cycle_navigate(c5, y, cyc, id,
                              [&](const Bijection& s) { return s == target; });
    CHECK(validate_sequence(c5, y, id, one, target).ok);

    // Transposing two big tokens flips their cyclic order: unreachable.
    Bijection unreach = swap_tokens(id, 2, 3);
    CHECK_THROWS_AS(cycle_navigate(c5, y, cyc, id,
                                   [&](const Bijection& s) { return s == unreach; }),
                    CertificateError);

    std::vector<int> not_cycle = {0, 1, 3};
    CHECK_THROWS_AS(cycle_navigate(c5, y, not_cycle, id, [](const Bijection&) { return true; }),
                    std::invalid_argument);
}

TEST_CASE("transfer certificate conjugation") {
    Graph c5 = build_named(NamedGraphSpec::cycle(5));
    Graph y = kbip(2, 5);
    Bijection start = {2, 0, 1, 3, 4};  // tokens 0,1 at positions 1,2
    auto cert = exchange_small_side_k2(c5, start);

    auto same = transfer_certificate(start, 0, 1, {}, cert);
    CHECK(same.size() == cert.size());
    CHECK(validate_sequence(c5, y, start, same, swap_tokens(start, 0, 1)).ok);

    // Legal prep moving big tokens only: swap along edge (3,4) = tokens 3,4.
    SwapSequence prep;
    prep.push(3, 4);
    auto moved = transfer_certificate(start, 0, 1, prep, cert);
    CHECK(moved.size() == cert.size() + 2);
    CHECK(moved.moves.front() == std::make_pair(3, 4));
    CHECK(moved.moves.back() == std::make_pair(3, 4));

    // Prep touching a protected token is rejected.
    SwapSequence bad;
    bad.push(1, 2);  // positions of tokens 0 and 1 in start
    CHECK_THROWS_AS(transfer_certificate(start, 0, 1, bad, cert), std::invalid_argument);
}

TEST_CASE("certified exchanges agree with the exhaustive path finder") {
    std::mt19937 rng(89);
    for (int rep = 0; rep < 10; ++rep) {
        Graph x = oracle::random_connected_graph(6, 0.5, rng);
        if (is_bipartite(x).bipartite) continue;
        Graph y = kbip(2, 6);
        Bijection sigma = random_adjacent_placement(x, 0, 1, rng);
        auto seq = exchange_small_side_k2(x, sigma);
        Bijection goal = swap_tokens(sigma, 0, 1);
        CHECK(validate_sequence(x, y, sigma, seq, goal).ok);
        auto shortest = fs_path(x, y, sigma, goal);
        REQUIRE(shortest.has_value());
        CHECK(shortest->size() <= seq.size());
    }
}
