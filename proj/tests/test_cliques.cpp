#include <doctest.h>

#include <algorithm>
#include <random>

#include "minrank/cliques.hpp"
#include "minrank/named_graphs.hpp"
#include "oracles.hpp"

using namespace minrank;
using namespace minrank::testing;

TEST_CASE("named graphs") {
    const auto k5 = maximal_cliques(complete_graph(5));
    REQUIRE(k5.size() == 1);
    CHECK(k5[0].size() == 5);

    const auto c5 = maximal_cliques(cycle_graph(5));
    CHECK(c5.size() == 5);
    for (VertexSet c : c5) CHECK(c.size() == 2);

    const auto p3 = maximal_cliques(path_graph(3));
    CHECK(p3 == std::vector<VertexSet>{VertexSet(0b011), VertexSet(0b110)});
}

TEST_CASE("matches exhaustive enumeration") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_small_graph(rng, 9);
        const auto got = maximal_cliques(g);
        CHECK(std::is_sorted(got.begin(), got.end()));

        std::vector<VertexSet> expected;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
            const VertexSet s(mask);
            if (!is_clique(g, s)) continue;
            bool maximal = true;
            for (int v = 0; v < g.order() && maximal; ++v) {
                if (!s.contains(v) && s.is_subset_of(g.neighbors(v))) maximal = false;
            }
            if (maximal) expected.push_back(s);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("every edge is covered and no clique contains another") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(rng, 20, 0.5);
        const auto cliques = maximal_cliques(g);
        for (VertexSet c : cliques) CHECK(is_clique(g, c));
        for (std::size_t i = 0; i < cliques.size(); ++i)
            for (std::size_t j = 0; j < cliques.size(); ++j)
                if (i != j) CHECK_FALSE(cliques[i].is_subset_of(cliques[j]));
        for (auto [u, v] : g.edges()) {
            const VertexSet e = VertexSet::single(u) | VertexSet::single(v);
            CHECK(std::any_of(cliques.begin(), cliques.end(), [&](VertexSet c) { return e.is_subset_of(c); }));
        }
    }
}
