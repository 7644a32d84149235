#include <doctest.h>

#include <random>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "minrank/minors.hpp"
#include "minrank/named_graphs.hpp"
#include "oracles.hpp"

using namespace minrank;
using namespace minrank::testing;

namespace {

// Independent route: Boyer-Myrvold embedding test from Boost.
bool boost_planar(const Graph& g, bool with_apex) {
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const int n = g.order() + (with_apex ? 1 : 0);
    BGraph b(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), b);
    if (with_apex) {
        for (int v = 0; v < g.order(); ++v) boost::add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(g.order()), b);
    }
    return boost::boyer_myrvold_planarity_test(b);
}

}  // namespace

TEST_CASE("minor relation on named graphs") {
    CHECK(has_minor(complete_graph(5), complete_graph(5)));
    CHECK(has_minor(complete_bipartite_graph(3, 3), complete_bipartite_graph(3, 3)));
    CHECK_FALSE(has_minor(cycle_graph(5), complete_graph(4)));
    CHECK(has_minor(cycle_graph(6), cycle_graph(4)));
    CHECK(has_minor(complete_graph(6), complete_bipartite_graph(3, 3)));
    CHECK_FALSE(has_minor(complete_bipartite_graph(3, 3), complete_graph(5)));
    // The wheel W5 has a K4 minor but is planar.
    Graph wheel = cycle_graph(5);
    Graph w(6);
    for (auto [u, v] : wheel.edges()) w.add_edge(u, v);
    for (int v = 0; v < 5; ++v) w.add_edge(v, 5);
    CHECK(has_minor(w, complete_graph(4)));
    CHECK(is_planar(w));
    CHECK_FALSE(is_outerplanar(w));
}

TEST_CASE("planarity of named graphs") {
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite_graph(3, 3)));
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_outerplanar(complete_graph(4)));
    CHECK_FALSE(is_outerplanar(complete_bipartite_graph(2, 3)));
    CHECK(is_outerplanar(path_graph(4)));
    CHECK(is_outerplanar(cycle_graph(7)));
    CHECK(is_outerplanar(Graph(1)));
}

TEST_CASE("agrees with Boyer-Myrvold on random graphs") {
    std::mt19937 rng(41);
    int nonplanar = 0;
    int non_outerplanar = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const Graph g = random_small_graph(rng, 8);
        const bool planar = is_planar(g);
        const bool outer = is_outerplanar(g);
        CHECK(planar == boost_planar(g, false));
        // G is outerplanar iff G plus a universal vertex is planar.
        CHECK(outer == boost_planar(g, true));
        if (outer) CHECK(planar);
        if (g.order() >= 3 && g.size() > 3 * g.order() - 6) CHECK_FALSE(planar);
        nonplanar += planar ? 0 : 1;
        non_outerplanar += outer ? 0 : 1;
    }
    CHECK(nonplanar > 20);
    CHECK(non_outerplanar > 50);
}

TEST_CASE("minor search without the edge-count shortcut") {
    // Sparse nonplanar graphs: subdivisions of K5 and K3,3 pass the Euler bound.
    Graph k33_sub(7);
    for (auto [u, v] : complete_bipartite_graph(3, 3).edges()) {
        if (u == 0 && v == 3) continue;
        k33_sub.add_edge(u, v);
    }
    k33_sub.add_edge(0, 6);
    k33_sub.add_edge(6, 3);
    CHECK(k33_sub.size() <= 3 * 7 - 6);
    CHECK(has_minor(k33_sub, complete_bipartite_graph(3, 3)));
    CHECK_FALSE(is_planar(k33_sub));
}
