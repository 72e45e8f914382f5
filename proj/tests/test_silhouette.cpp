#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "modsub/oracle.hpp"
#include "modsub/sampler.hpp"
#include "modsub/silhouette.hpp"

using namespace modsub;

TEST_CASE("silhouette graph recognition") {
    CHECK(is_silhouette_graph(Graph::delta1()));
    CHECK(is_silhouette_graph(Graph::delta2()));
    CHECK_FALSE(is_silhouette_graph(Graph::delta2(true))); // wrong arc direction
    CHECK_FALSE(is_silhouette_graph(Graph::delta3()));
    CHECK_FALSE(is_silhouette_graph(Graph::delta4()));
    CHECK_FALSE(is_silhouette_graph(Graph::delta1().relabeled([](Label) { return 2; })));
    CHECK(is_silhouette_graph(fixtures::fig_h()));
    CHECK_FALSE(is_silhouette_graph(fixtures::fig_h(true))); // rooted
    CHECK_FALSE(is_silhouette_graph(fixtures::fig_k()));
    CHECK_FALSE(is_silhouette_graph(fixtures::fig_l()));
}

TEST_CASE("terminal graphs rewrite to themselves") {
    CHECK(silhouette(Graph::delta1()) == Graph::delta1());
    CHECK(silhouette(Graph::delta2()) == Graph::delta2());
    CHECK(silhouette(fixtures::fig_h()) == fixtures::fig_h());
}

TEST_CASE("reference rewrites") {
    // the 18-vertex graph contracts to exactly the two-triangle graph
    CHECK(silhouette(fixtures::fig_l()) == fixtures::fig_h());
    // free rank 1: down to the preferred two-vertex graph
    CHECK(silhouette(fixtures::fig_k()) == Graph::delta2());
    // rank 0 examples
    CHECK(silhouette(Graph::delta3()) == Graph::delta1());
    CHECK(silhouette(Graph::delta4()) == Graph::delta1());
}

TEST_CASE("traces replay") {
    std::vector<Move> trace;
    Graph end = silhouette(fixtures::fig_l(), &trace);
    CHECK(!trace.empty());
    Graph cur = fixtures::fig_l();
    for (const Move& m : trace) cur = apply_move(cur, m);
    CHECK(cur.normalized() == end);
    CHECK(enumerate_moves(cur).empty());
}

TEST_CASE("silhouette requires a clean start") {
    CHECK_THROWS_AS(silhouette(fixtures::fig_l(true)), PreconditionError);
    Graph off = fixtures::fig_k().relabeled([](Label v) { return v + 2; });
    CHECK_THROWS_AS(silhouette(off), PreconditionError);
    // a non-cyclically-reduced graph: a bare vertex on an a-edge
    Graph nr;
    nr.add_vertex(1);
    nr.add_vertex(2);
    nr.add_a_edge(1, 2);
    nr.add_b_loop(2);
    CHECK_THROWS_AS(silhouette(nr), PreconditionError);
}

TEST_CASE("choice order does not change the result") {
    std::mt19937 prng(97);
    auto random_choice = [&prng](std::size_t k) {
        return static_cast<std::size_t>(prng() % k);
    };
    for (int n = 1; n <= 5; ++n) {
        for_each_cyclically_reduced(n, [&](const Graph& g) {
            Graph ref = silhouette(g);
            for (int rep = 0; rep < 3; ++rep)
                CHECK(silhouette_with_choice(g, random_choice) == ref);
        });
    }
}

TEST_CASE("free rank decides the silhouette") {
    // r = 0 collapses to the one-vertex graph, r = 1 to the two-vertex one,
    // r >= 2 to a silhouette of size 6(r-1); the rank itself is preserved
    for (int n = 1; n <= 5; ++n) {
        for_each_cyclically_reduced(n, [&](const Graph& g) {
            int r = g.isomorphism_type().r;
            Graph s = silhouette(g);
            CAPTURE(g.key());
            if (r == 0) {
                CHECK(s == Graph::delta1());
            } else if (r == 1) {
                CHECK(s == Graph::delta2());
            } else {
                CHECK(s.size() == 6 * (r - 1));
                CHECK(is_silhouette_graph(s));
            }
            CHECK(s.isomorphism_type().r == r);
        });
    }
}

TEST_CASE("random bigger graphs stay confluent") {
    CountTable table;
    RandomSource rng(410);
    std::mt19937 prng(8);
    auto random_choice = [&prng](std::size_t k) {
        return static_cast<std::size_t>(prng() % k);
    };
    // a mixed type with every feature present
    const CombinatorialType t{12, 5, 2, 2, 2};
    REQUIRE(t.valid_cyclic());
    for (int i = 0; i < 25; ++i) {
        Graph g = random_cyclically_reduced_graph(t, rng, table);
        Graph ref = silhouette(g);
        CHECK(silhouette_with_choice(g, random_choice) == ref);
        CHECK(ref.isomorphism_type().r == g.isomorphism_type().r);
    }
}
