#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hs/exact.hpp"
#include "hs/graph.hpp"
#include "hs/hoffman.hpp"

using namespace hs;

namespace {

// small random Hoffman graph that decompose() reports as one factor: chain
// consecutive slim vertices together with forcing fat sets, then sprinkle
// private fat vertices
HoffmanGraph random_indecomposable(std::mt19937& rng, int max_slim) {
    const int s = 1 + static_cast<int>(rng() % max_slim);
    Graph slim(s);
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v)
            if (rng() % 2) slim.add_edge(u, v);

    std::vector<std::vector<int>> fat;
    for (int i = 0; i + 1 < s; ++i) {
        // force i and i+1 into one factor: two common fat if adjacent
        // (|N^f| != 1), one common fat otherwise (|N^f| >= 1)
        fat.push_back({i, i + 1});
        if (slim.adjacent(i, i + 1)) fat.push_back({i, i + 1});
    }
    for (int i = 0; i < s; ++i)
        if (rng() % 2) fat.push_back({i});
    if (fat.empty()) fat.push_back({0});
    return make_hoffman(slim, fat);
}

} // namespace

TEST_CASE("construction and validation") {
    Graph one(1);
    HoffmanGraph h = make_hoffman(one, {{0}, {0}});
    CHECK(h.slim_count() == 1);
    CHECK(h.fat_count() == 2);
    CHECK(is_t_fat(h, 2));

    CHECK_THROWS_AS(make_hoffman(one, {{}}), std::invalid_argument);

    // fat vertices must be independent with a slim neighbor each
    Graph bad(2);
    bad.add_edge(0, 1);
    CHECK_THROWS_AS(HoffmanGraph(bad, {true, true}), std::invalid_argument);
}

TEST_CASE("reference shapes") {
    HoffmanGraph g3 = g3_shape(), g4 = g4_shape(), g5 = g5_shape();
    CHECK(g3.slim_count() == 2);
    CHECK(g3.fat_count() == 3);
    CHECK(g4.slim_count() == 2);
    CHECK(g4.fat_count() == 2);
    CHECK(g5.slim_count() == 1);
    CHECK(g5.fat_count() == 3);
    CHECK(is_t_fat(g5, 3));
    CHECK(is_t_fat(g3, 2));
    CHECK(is_isomorphic(slim_graph(g4), complete_graph(2)));
}

TEST_CASE("special matrix") {
    // lone slim vertex with f fat neighbors: [-f]
    for (int f = 1; f <= 4; ++f) {
        Graph one(1);
        std::vector<std::vector<int>> fat(f, std::vector<int>{0});
        IntMatrix s = special_matrix(make_hoffman(one, fat));
        REQUIRE(s.rows() == 1);
        CHECK(s(0, 0) == -f);
    }

    IntMatrix s4 = special_matrix(g4_shape());
    CHECK(s4(0, 0) == -2);
    CHECK(s4(0, 1) == -1);
    CHECK(s4(1, 0) == -1);
    CHECK(s4(1, 1) == -2);
    CHECK(spectrum(s4).to_string() == "(-1)^1 (-3)^1");

    IntMatrix s3 = special_matrix(g3_shape());
    CHECK(s3(0, 0) == -2);
    CHECK(s3(0, 1) == 0);
    CHECK(s3(1, 0) == 0);
    CHECK(s3(1, 1) == -2);
}

TEST_CASE("special matrix is symmetric") {
    std::mt19937 rng(43);
    for (int it = 0; it < 30; ++it) {
        IntMatrix s = special_matrix(random_indecomposable(rng, 5));
        CHECK(is_symmetric(s));
    }
}

TEST_CASE("quasi-cliques") {
    HoffmanGraph g4 = g4_shape();
    int f = g4.fat_vertices()[0];
    CHECK(quasi_clique_order(g4, f) == 2);
    CHECK(quasi_clique(g4, f).num_edges() == 1);
    CHECK_THROWS_AS((void)quasi_clique(g4, g4.slim_vertices()[0]),
                    std::invalid_argument);
}

TEST_CASE("direct sum reproduces the g3 shape") {
    Graph one(1);
    HoffmanGraph a = make_hoffman(one, {{0}, {0}});
    HoffmanGraph b = make_hoffman(one, {{0}, {0}});
    // glue a's second fat vertex onto b's first
    HoffmanGraph sum = direct_sum(a, b, {{a.fat_vertices()[1], b.fat_vertices()[0]}});
    CHECK(sum.slim_count() == 2);
    CHECK(sum.fat_count() == 3);
    CHECK(sum.graph().adjacent(0, 1));  // shared fat neighbor implies adjacency
    CHECK(is_isomorphic(sum.graph(), g3_shape().graph()));

    // no gluing: disjoint parts
    HoffmanGraph disjoint = direct_sum(a, b, {});
    CHECK_FALSE(disjoint.graph().adjacent(0, 1));

    // gluing both fat pairs would give the cross pair two common fat vertices
    CHECK_THROWS_AS(direct_sum(a, b,
                               {{a.fat_vertices()[0], b.fat_vertices()[0]},
                                {a.fat_vertices()[1], b.fat_vertices()[1]}}),
                    std::invalid_argument);
}

TEST_CASE("decompose base cases") {
    CHECK(decompose(g4_shape()).factors.size() == 1);

    Graph two(2);
    HoffmanGraph split = make_hoffman(two, {{0}, {1}});
    CHECK(decompose(split).factors.size() == 2);

    // g3 = sum of two one-slim graphs glued on the middle fat vertex
    auto d3 = decompose(g3_shape());
    CHECK(d3.factors.size() == 2);
}

TEST_CASE("decompose after direct_sum round trip") {
    std::mt19937 rng(47);
    int done = 0;
    while (done < 120) {
        HoffmanGraph a = random_indecomposable(rng, 4);
        HoffmanGraph b = random_indecomposable(rng, 4);
        if (decompose(a).factors.size() != 1 || decompose(b).factors.size() != 1)
            continue;  // sprinkled fat can merge chain links; skip those

        // try to glue one random fat pair; empty gluing stays valid
        std::vector<std::pair<int, int>> gluing;
        if (rng() % 2)
            gluing.push_back({a.fat_vertices()[rng() % a.fat_count()],
                              b.fat_vertices()[rng() % b.fat_count()]});
        HoffmanGraph sum = direct_sum(a, b, gluing);
        ++done;

        auto d = decompose(sum);
        REQUIRE(d.factors.size() == 2);
        // layout: a's slim vertices first, then b's
        std::vector<int> sa(a.slim_count()), sb(b.slim_count());
        for (int i = 0; i < a.slim_count(); ++i) sa[i] = i;
        for (int i = 0; i < b.slim_count(); ++i) sb[i] = a.slim_count() + i;
        CHECK(d.factors[0].slim == sa);
        CHECK(d.factors[1].slim == sb);

        // the cross condition holds literally between the factors
        for (int x : d.factors[0].slim)
            for (int y : d.factors[1].slim) {
                int nf = static_cast<int>(sum.common_fat(x, y).size());
                CHECK((sum.graph().adjacent(x, y) ? nf == 1 : nf == 0));
            }
    }
}

TEST_CASE("two fat vertices share at most two slim neighbors in g3/g4/g5 sums") {
    std::mt19937 rng(53);
    const int t = 3;
    // build a sum of shapes by repeatedly gluing g5-like pieces on a chain
    for (int it = 0; it < 30; ++it) {
        Graph one(1);
        HoffmanGraph acc = make_hoffman(one, {{0}, {0}, {0}});
        for (int step = 0; step < 4; ++step) {
            HoffmanGraph next =
                rng() % 2 ? g4_shape()
                          : make_hoffman(Graph(1), {{0}, {0}, {0}});
            int fa = acc.fat_vertices()[rng() % acc.fat_count()];
            int fb = next.fat_vertices()[rng() % next.fat_count()];
            try {
                acc = direct_sum(acc, next, {{fa, fb}});
            } catch (const std::invalid_argument&) {
                continue;
            }
        }
        const auto& fats = acc.fat_vertices();
        for (std::size_t i = 0; i < fats.size(); ++i)
            for (std::size_t j = i + 1; j < fats.size(); ++j) {
                auto shared = acc.common_slim(fats[i], fats[j]);
                CHECK(shared.size() <= 2);
                if (shared.size() == 2)
                    CHECK(acc.graph().adjacent(shared[0], shared[1]));
            }
    }
    (void)t;
}

TEST_CASE("factor classification") {
    const int t = 5;
    FactorType f4 = classify_factor(g4_shape(), t, {2 * t + 2, 2 * t + 2});
    CHECK(f4.tag == FactorTag::G4);
    CHECK(f4.vertex_types == std::vector<int>{2, 2});

    FactorType f5a = classify_factor(g5_shape(), t, {2 * t + 2, 2 * t + 1, 1});
    CHECK(f5a.tag == FactorTag::G5);
    CHECK(f5a.vertex_types == std::vector<int>{3});

    FactorType f5b = classify_factor(g5_shape(), t, {2 * t + 2, 2 * t, 2});
    CHECK(f5b.vertex_types == std::vector<int>{4});

    FactorType f5c = classify_factor(g5_shape(), t, {2 * t + 1, 2 * t + 1, 2});
    CHECK(f5c.vertex_types == std::vector<int>{5});

    // a lone slim vertex with two fat neighbors of order 2t+2 outside a g4
    // factor is Type 1
    Graph one(1);
    HoffmanGraph h1 = make_hoffman(one, {{0}, {0}});
    FactorType f1 = classify_factor(h1, t, {2 * t + 2, 2 * t + 2});
    CHECK(f1.tag == FactorTag::Other);
    CHECK(f1.vertex_types == std::vector<int>{1});

    FactorType f3 = classify_factor(g3_shape(), t, {1, 2 * t + 2, 1});
    CHECK(f3.tag == FactorTag::G3);
}

TEST_CASE("hoffman text round trip") {
    HoffmanGraph g3 = g3_shape();
    HoffmanGraph back = hoffman_from_text(to_hoffman_text(g3));
    CHECK(back.graph() == g3.graph());
    CHECK(back.fat_vertices() == g3.fat_vertices());

    std::mt19937 rng(59);
    for (int it = 0; it < 20; ++it) {
        HoffmanGraph h = random_indecomposable(rng, 5);
        HoffmanGraph b = hoffman_from_text(to_hoffman_text(h));
        CHECK(b.graph() == h.graph());
        CHECK(b.fat_vertices() == h.fat_vertices());
    }
}
