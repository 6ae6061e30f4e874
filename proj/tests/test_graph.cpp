#include <doctest.h>

#include <random>
#include <sstream>

#include "hs/exact.hpp"
#include "hs/graph.hpp"

using namespace hs;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("grid builder") {
    Graph g = build_grid(2, 2);
    CHECK(g.order() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(is_isomorphic(g, cycle_graph(4)));

    Graph g33 = build_grid(3, 3);
    CHECK(g33.order() == 9);
    for (int v = 0; v < 9; ++v) CHECK(g33.degree(v) == 4);
    CHECK(spectrum(g33).to_string() == "4^1 1^4 (-2)^4");
}

TEST_CASE("clique extension") {
    Graph e = build_clique_extension(build_grid(3, 3), 2);
    CHECK(e.order() == 18);
    for (int v = 0; v < 18; ++v) CHECK(e.degree(v) == 9);
    CHECK(spectrum(e).to_string() == "9^1 3^4 (-1)^9 (-3)^4");

    Graph c4x2 = build_clique_extension(cycle_graph(4), 2);
    Graph comp = complement(disjoint_union({cycle_graph(4), cycle_graph(4)}));
    CHECK(is_isomorphic(c4x2, comp));
}

TEST_CASE("coclique extension") {
    Graph g = build_grid(2, 2);
    CHECK(is_isomorphic(build_coclique_extension(g, 1), g));
    CHECK(is_isomorphic(build_coclique_extension(complete_graph(2), 2),
                        cycle_graph(4)));
    Graph h = build_coclique_extension(g, 2);
    CHECK(h.order() == 8);
    for (int v = 0; v < 8; ++v) CHECK(h.degree(v) == 4);
}

TEST_CASE("small builders") {
    Graph cp3 = cocktail_party(3);
    CHECK(cp3.order() == 6);
    for (int v = 0; v < 6; ++v) CHECK(cp3.degree(v) == 4);
    CHECK(cp3.num_edges() == 12);
    CHECK(spectrum(cp3).to_string() == "4^1 0^3 (-2)^2");

    CHECK(is_isomorphic(line_graph(complete_graph(3)), complete_graph(3)));

    Graph c8bar = complement(disjoint_union({cycle_graph(4), cycle_graph(4)}));
    CHECK(c8bar.order() == 8);
    for (int v = 0; v < 8; ++v) CHECK(c8bar.degree(v) == 5);
}

TEST_CASE("pair stats and walk counts") {
    Graph e = build_clique_extension(build_grid(3, 3), 2);
    // copies of one grid cell sit at 2v, 2v+1
    VertexPairStats twin = pair_stats(e, 0, 1);
    CHECK(twin.adjacent);
    CHECK(twin.common_neighbors == 8);  // twins: k-1 at t=2
    CHECK(twin.walk3 == 41);            // 24t+1-(5-2t)*8

    VertexPairStats adj = pair_stats(e, 0, 2);  // copies of adjacent grid cells
    CHECK(adj.adjacent);
    CHECK(adj.common_neighbors == 4);  // 2(t-1)+2 at t=2
    CHECK(adj.walk3 == 45);            // 24t+1-(5-2t)*4

    bool found_nonadj = false;
    for (int y = 2; y < e.order() && !found_nonadj; ++y) {
        if (e.adjacent(0, y)) continue;
        VertexPairStats s = pair_stats(e, 0, y);
        CHECK(s.common_neighbors == 4);
        CHECK(s.walk3 == 36);  // 16t+8-(5-2t)*4
        found_nonadj = true;
    }
    CHECK(found_nonadj);

    Graph c4 = cycle_graph(4);
    VertexPairStats opp = pair_stats(c4, 0, 2);
    CHECK_FALSE(opp.adjacent);
    CHECK(opp.common_neighbors == 2);
    CHECK(opp.walk3 == 0);

    CHECK(diagonal_walk3(e, 0) == 40);
    CHECK(diagonal_walk3(c4, 0) == 0);
    CHECK(diagonal_walk3(complete_graph(4), 0) == 6);
}

TEST_CASE("pair stats properties") {
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_graph(rng, 12, 0.4);
        for (int x = 0; x < 12; ++x) {
            CHECK(diagonal_walk3(g, x) % 2 == 0);
            for (int y = x + 1; y < 12; ++y) {
                VertexPairStats a = pair_stats(g, x, y);
                VertexPairStats b = pair_stats(g, y, x);
                CHECK(a.adjacent == b.adjacent);
                CHECK(a.common_neighbors == b.common_neighbors);
                CHECK(a.walk3 == b.walk3);
            }
        }
    }
}

TEST_CASE("max clique") {
    CHECK(max_clique(complete_graph(5)) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(max_clique(cycle_graph(5)).size() == 2);

    Graph e = build_clique_extension(build_grid(3, 3), 2);
    auto c = max_clique(e);
    CHECK(c.size() == 6);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            CHECK(e.adjacent(c[i], c[j]));

    auto all = all_maximum_cliques(e);
    CHECK(all.size() == 6);  // 3 doubled rows + 3 doubled columns
    for (auto& q : all) CHECK(q.size() == 6);
}

TEST_CASE("twin classes and quotient") {
    Graph e = build_clique_extension(cycle_graph(4), 2);
    Partition tw = twin_classes(e);
    CHECK(tw.num_classes() == 4);
    for (auto& c : tw.classes) CHECK(c.size() == 2);

    CHECK(twin_classes(cycle_graph(4)).num_classes() == 4);
    CHECK(twin_classes(complete_graph(3)).num_classes() == 1);

    Graph q = quotient_by_twins(build_clique_extension(build_grid(3, 3), 2), 2);
    CHECK(is_isomorphic(q, build_grid(3, 3)));
    CHECK(is_isomorphic(quotient_by_twins(build_clique_extension(cycle_graph(5), 3), 3),
                        cycle_graph(5)));
    CHECK_THROWS_AS((void)quotient_by_twins(cycle_graph(4), 2), std::invalid_argument);
}

TEST_CASE("isomorphism") {
    CHECK(is_isomorphic(cycle_graph(4), build_grid(2, 2)));
    CHECK_FALSE(is_isomorphic(cycle_graph(5), cycle_graph(6)));
    CHECK(is_isomorphic(build_clique_extension(cycle_graph(4), 2),
                        complement(disjoint_union({cycle_graph(4), cycle_graph(4)}))));
    auto m = find_isomorphism(cycle_graph(6), cycle_graph(6));
    REQUIRE(m.has_value());
    Graph c6 = cycle_graph(6);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v)
            CHECK(c6.adjacent(u, v) == c6.adjacent((*m)[u], (*m)[v]));
}

TEST_CASE("complement involution and line graph degrees") {
    std::mt19937 rng(11);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_graph(rng, 10, 0.5);
        CHECK(complement(complement(g)) == g);
        Graph lg = line_graph(g);
        int e = 0;
        for (int u = 0; u < g.order(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) {
                    CHECK(lg.degree(e) == g.degree(u) + g.degree(v) - 2);
                    ++e;
                }
        CHECK(lg.order() == e);
    }
}

TEST_CASE("extension round trip") {
    std::mt19937 rng(13);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_graph(rng, 8, 0.4);
        for (int q = 2; q <= 3; ++q) {
            Graph ext = build_clique_extension(g, q);
            // round trip needs no pre-existing adjacent twins; random graphs
            // here rarely have them, but guard anyway
            bool adjacent_twins = false;
            Partition tw = twin_classes(g);
            for (auto& c : tw.classes) adjacent_twins |= c.size() > 1;
            if (adjacent_twins) continue;
            CHECK(is_isomorphic(quotient_by_twins(ext, q), g));
        }
    }
}

TEST_CASE("edge list round trip") {
    Graph g = build_grid(2, 2);
    std::string text = to_edge_list(g);
    CHECK(text.rfind("4 4\n0 1\n0 2\n1 3\n2 3\n", 0) == 0);
    Graph back = graph_from_edge_list(text);
    CHECK(back == g);
    CHECK(back.label(0) == g.label(0));

    std::mt19937 rng(17);
    for (int it = 0; it < 10; ++it) {
        Graph r = random_graph(rng, 9, 0.5);
        CHECK(graph_from_edge_list(to_edge_list(r)) == r);
    }

    CHECK(to_dot(g).rfind("graph G {", 0) == 0);
}
