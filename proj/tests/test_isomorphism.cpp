#include <doctest.h>

#include <random>

#include "minrank/isomorphism.hpp"
#include "minrank/named_graphs.hpp"
#include "oracles.hpp"

using namespace minrank;
using namespace minrank::testing;

TEST_CASE("named cases") {
    CHECK_FALSE(is_isomorphic(path_graph(4), star_graph(3)));
    // The complement of C5 is again a 5-cycle.
    CHECK(brute_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
    CHECK(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
    CHECK_FALSE(is_isomorphic(cycle_graph(6), complement(cycle_graph(6))));
    CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)));
}

TEST_CASE("returned mapping is an isomorphism") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_small_graph(rng, 8);
        const Graph h = relabel(g, random_permutation(rng, g.order()));
        const auto map = find_isomorphism(g, h);
        REQUIRE(map.has_value());
        for (auto [u, v] : g.edges()) CHECK(h.has_edge((*map)[static_cast<std::size_t>(u)], (*map)[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("agrees with the permutation oracle") {
    std::mt19937 rng(4);
    int positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        const Graph g = random_graph(rng, n, 0.5);
        // Pair with either a relabelled copy, a one-edge edit, or an unrelated graph.
        Graph h = relabel(g, random_permutation(rng, n));
        const int mode = trial % 3;
        if (mode == 1 && n >= 2) {
            const int u = 0;
            const int v = 1;
            if (h.has_edge(u, v)) h.remove_edge(u, v); else h.add_edge(u, v);
        } else if (mode == 2) {
            h = random_graph(rng, n, 0.5);
        }
        const bool expected = brute_isomorphic(g, h);
        positives += expected ? 1 : 0;
        CHECK(is_isomorphic(g, h) == expected);
        CHECK(is_isomorphic(h, g) == expected);
    }
    CHECK(positives > 100);
}

TEST_CASE("contains_induced") {
    CHECK(contains_induced(path_graph(5), path_graph(4)));
    CHECK_FALSE(contains_induced(complete_graph(5), path_graph(4)));
    CHECK(brute_contains_induced(cycle_graph(5), path_graph(4)));
    CHECK(contains_induced(cycle_graph(5), path_graph(4)));
    CHECK_FALSE(contains_induced(path_graph(3), path_graph(4)));

    std::mt19937 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_small_graph(rng, 7);
        const Graph p = random_small_graph(rng, 4);
        CHECK(contains_induced(g, p) == brute_contains_induced(g, p));
    }
}
