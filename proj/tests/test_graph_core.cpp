#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fslab/graph.hpp"
#include "fslab/graph_algos.hpp"
#include "oracle.hpp"

using namespace fslab;

TEST_CASE("named constructors produce the expected labeled graphs") {
    Graph kb = build_named(NamedGraphSpec::complete_bipartite(2, 3));
    CHECK(kb.order() == 5);
    CHECK(kb.edge_count() == 6);
    CHECK(kb.has_edge(0, 2));
    CHECK(kb.has_edge(1, 4));
    CHECK(!kb.has_edge(0, 1));
    CHECK(!kb.has_edge(2, 3));
    CHECK(is_bipartite(kb).bipartite);

    Graph c5 = build_named(NamedGraphSpec::cycle(5));
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.has_edge(4, 0));
    CHECK(is_cycle_graph(c5));
    CHECK(!is_bipartite(c5).bipartite);

    Graph s6 = build_named(NamedGraphSpec::star(6));
    CHECK(s6.edge_count() == 5);
    CHECK(s6.degree(0) == 5);
    for (int v = 1; v < 6; ++v) CHECK(s6.degree(v) == 1);

    Graph sp6 = build_named(NamedGraphSpec::star_plus(6));
    CHECK(sp6.edge_count() == 6);
    CHECK(sp6.has_edge(1, 2));

    Graph k4 = build_named(NamedGraphSpec::complete(4));
    CHECK(k4.edge_count() == 6);

    Graph th = build_named(NamedGraphSpec::theta());
    CHECK(th.order() == 7);
    CHECK(th.edge_count() == 8);
    CHECK(th.has_edge(6, 0));
    CHECK(th.has_edge(6, 3));
    CHECK(!is_bipartite(th).bipartite);
    CHECK(vertex_connectivity(th) == 2);
}

TEST_CASE("spec string parsing") {
    auto s = NamedGraphSpec::parse("kbip:2,7");
    REQUIRE(s.has_value());
    CHECK(s->kind == NamedGraphSpec::Kind::CompleteBipartite);
    CHECK(s->a == 2);
    CHECK(s->b == 7);
    CHECK(NamedGraphSpec::parse("cycle:9").has_value());
    CHECK(NamedGraphSpec::parse("theta").has_value());
    CHECK(NamedGraphSpec::parse("starplus:8").has_value());
    CHECK(!NamedGraphSpec::parse("pentagon:5").has_value());
    CHECK(!NamedGraphSpec::parse("cycle:x").has_value());
    CHECK(!NamedGraphSpec::parse("kbip:3").has_value());
}

TEST_CASE("add_edge rejects loops, duplicates and out-of-range") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("edge list round trip and parse errors") {
    Graph g = build_named(NamedGraphSpec::theta());
    std::istringstream in(to_edge_list(g));
    Graph h = parse_edge_list(in);
    CHECK(g == h);

    std::istringstream bad("3 2\n0 1\n1 1\n");
    CHECK_THROWS_AS(parse_edge_list(bad), std::invalid_argument);
    std::istringstream trunc("3 2\n0 1\n");
    CHECK_THROWS_AS(parse_edge_list(trunc), std::invalid_argument);
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 12; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            Graph g = oracle::random_graph(n, 0.4, rng);
            Graph h = parse_graph6(to_graph6(g));
            CHECK(g == h);
        }
    }
    CHECK_THROWS_AS(parse_graph6("\x01 bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
}

TEST_CASE("connectivity and bipartite checks with witness verification") {
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK(!is_connected(two));
    CHECK(is_connected(build_named(NamedGraphSpec::cycle(6))));

    std::mt19937 rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = oracle::random_graph(7, 0.45, rng);
        CHECK(is_connected(g) == oracle::graph_connected(g));
        auto bip = is_bipartite(g);
        if (bip.bipartite) {
            for (auto [u, v] : g.edges()) CHECK(bip.coloring[u] != bip.coloring[v]);
        } else {
            // Witness is an odd cycle given as a vertex list (wrap closes it).
            const auto& w = bip.odd_closed_walk;
            REQUIRE(w.size() >= 3);
            CHECK(w.size() % 2 == 1);
            for (size_t i = 0; i < w.size(); ++i) CHECK(g.has_edge(w[i], w[(i + 1) % w.size()]));
        }
    }
}

TEST_CASE("vertex connectivity matches brute force") {
    CHECK(vertex_connectivity(build_named(NamedGraphSpec::complete(5))) == 4);
    CHECK(vertex_connectivity(build_named(NamedGraphSpec::cycle(8))) == 2);
    CHECK(vertex_connectivity(build_named(NamedGraphSpec::star(6))) == 1);
    CHECK(vertex_connectivity(Graph(1)) == 0);

    std::mt19937 rng(23);
    for (int n = 4; n <= 7; ++n)
        for (int rep = 0; rep < 25; ++rep) {
            Graph g = oracle::random_graph(n, 0.25 + 0.1 * (rep % 6), rng);
            CHECK(vertex_connectivity(g) == oracle::brute_vertex_connectivity(g));
        }
}

TEST_CASE("bridges match edge-deletion brute force") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = oracle::random_graph(8, 0.3, rng);
        CHECK(bridges(g) == oracle::brute_bridges(g));
    }
    Graph p5 = Graph(5);
    for (int v = 0; v + 1 < 5; ++v) p5.add_edge(v, v + 1);
    CHECK(bridges(p5).size() == 4);
    CHECK(bridges(build_named(NamedGraphSpec::cycle(5))).empty());
}

TEST_CASE("non-trivial k-bridge detection") {
    // Two triangles joined by an edge: that edge is a non-trivial 2-bridge.
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    g.add_edge(4, 5);
    g.add_edge(2, 3);
    auto b2 = find_nontrivial_k_bridge(g, 2);
    REQUIRE(b2.has_value());
    CHECK(*b2 == std::vector<int>{2, 3});

    // Star: every cut edge has a leaf endpoint, so all bridges are trivial.
    CHECK(!find_nontrivial_k_bridge(build_named(NamedGraphSpec::star(6)), 2));
    // Path interior edge qualifies.
    Graph p5(5);
    for (int v = 0; v + 1 < 5; ++v) p5.add_edge(v, v + 1);
    auto pb = find_nontrivial_k_bridge(p5, 2);
    REQUIRE(pb.has_value());
    CHECK(*pb == std::vector<int>{1, 2});
    // But its 3-bridge must consist of two consecutive cut edges with an
    // internal degree-2 vertex.
    auto pb3 = find_nontrivial_k_bridge(p5, 3);
    REQUIRE(pb3.has_value());
    CHECK(*pb3 == std::vector<int>{1, 2, 3});

    // Two K_4 blocks joined through a 3-vertex path of cut edges.
    Graph h(11);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) h.add_edge(u, v);
    for (int u = 7; u < 11; ++u)
        for (int v = u + 1; v < 11; ++v) h.add_edge(u, v);
    h.add_edge(3, 4);
    h.add_edge(4, 5);
    h.add_edge(5, 6);
    h.add_edge(6, 7);
    auto b3 = find_nontrivial_k_bridge(h, 3);
    REQUIRE(b3.has_value());
    for (size_t i = 1; i + 1 < b3->size(); ++i) CHECK(h.degree((*b3)[i]) == 2);
    CHECK(b3->size() == 3);
    // The whole 5-vertex chain between the two blocks is a 5-bridge; nothing
    // longer exists.
    auto b5 = find_nontrivial_k_bridge(h, 5);
    REQUIRE(b5.has_value());
    CHECK(*b5 == std::vector<int>{3, 4, 5, 6, 7});
    CHECK(find_nontrivial_k_bridge(h, 6) == std::nullopt);
    // Cycles have no cut edges at all.
    CHECK(!find_nontrivial_k_bridge(build_named(NamedGraphSpec::cycle(9)), 2));
}

TEST_CASE("shortest odd cycle") {
    CHECK(!shortest_odd_cycle(build_named(NamedGraphSpec::cycle(8))));
    CHECK(!shortest_odd_cycle(build_named(NamedGraphSpec::complete_bipartite(3, 3))));

    auto tri = shortest_odd_cycle(build_named(NamedGraphSpec::complete(4)));
    REQUIRE(tri.has_value());
    CHECK(*tri == std::vector<int>{0, 1, 2});

    auto th = shortest_odd_cycle(build_named(NamedGraphSpec::theta()));
    REQUIRE(th.has_value());
    CHECK(th->size() == 5);

    auto c9 = shortest_odd_cycle(build_named(NamedGraphSpec::cycle(9)));
    REQUIRE(c9.has_value());
    CHECK(c9->size() == 9);

    // Validity on random non-bipartite graphs: odd length, closing edge,
    // consecutive edges, distinct vertices.
    std::mt19937 rng(41);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = oracle::random_graph(8, 0.3, rng);
        auto cyc = shortest_odd_cycle(g);
        CHECK(cyc.has_value() == !is_bipartite(g).bipartite);
        if (!cyc) continue;
        CHECK(cyc->size() % 2 == 1);
        std::vector<char> seen(8, 0);
        for (size_t i = 0; i < cyc->size(); ++i) {
            CHECK(!seen[(*cyc)[i]]);
            seen[(*cyc)[i]] = 1;
            CHECK(g.has_edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
        }
    }
}

TEST_CASE("shortest cycle through an edge") {
    Graph c5 = build_named(NamedGraphSpec::cycle(5));
    auto whole = shortest_cycle_through_edge(c5, 0, 1);
    REQUIRE(whole.has_value());
    CHECK(whole->size() == 5);
    CHECK(whole->front() == 0);
    CHECK(whole->back() == 1);

    Graph k4 = build_named(NamedGraphSpec::complete(4));
    auto tri = shortest_cycle_through_edge(k4, 0, 1);
    REQUIRE(tri.has_value());
    CHECK(tri->size() == 3);
    CHECK(tri->front() == 0);
    CHECK(tri->back() == 1);
    for (size_t i = 0; i + 1 < tri->size(); ++i) CHECK(k4.has_edge((*tri)[i], (*tri)[i + 1]));

    Graph star = build_named(NamedGraphSpec::star(5));
    CHECK(!shortest_cycle_through_edge(star, 0, 1));
}

TEST_CASE("canonical mask is a relabeling invariant") {
    std::mt19937 rng(53);
    Graph th = build_named(NamedGraphSpec::theta());
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<int> relabel(7);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        Graph perm(7);
        for (auto [u, v] : th.edges()) perm.add_edge(relabel[u], relabel[v]);
        CHECK(canonical_mask(perm) == canonical_mask(th));
        CHECK(is_theta(perm));
    }
    CHECK(canonical_mask(build_named(NamedGraphSpec::cycle(6))) !=
          canonical_mask(build_named(NamedGraphSpec::complete_bipartite(3, 3))));
    CHECK(!is_theta(build_named(NamedGraphSpec::cycle(7))));
    Graph almost = build_named(NamedGraphSpec::theta());
    CHECK(is_theta(almost));
    // Moving the apex attachment breaks it.
    Graph other(7);
    for (int v = 0; v < 6; ++v) other.add_edge(v, (v + 1) % 6);
    other.add_edge(0, 6);
    other.add_edge(2, 6);
    CHECK(!is_theta(other));
}
