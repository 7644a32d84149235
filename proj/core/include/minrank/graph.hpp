#ifndef MINRANK_GRAPH_HPP
#define MINRANK_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "minrank/vertex_set.hpp"

namespace minrank {

/// Undirected simple graph on vertices 0..order()-1, one adjacency word per vertex.
///
/// Adjacency is kept symmetric and loop-free by every mutator, so a Graph value
/// always satisfies the usual invariants. Orders 1..64 are supported; a
/// default-constructed Graph has order 0 and is only useful as a placeholder.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices. Throws std::invalid_argument unless 0 <= n <= 64.
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    /// Number of edges.
    int size() const;

    VertexSet vertices() const { return VertexSet::first(order()); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbors(v).size(); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }

    /// Throws std::invalid_argument on a loop or an out-of-range endpoint.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;  // sorted descending
    int max_degree() const;
    int min_degree() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> adj_;
};

/// Vertices reachable from `start` using only vertices in `within`.
VertexSet reachable(const Graph& g, int start, VertexSet within);

/// Connected components, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// BFS eccentricity maximum. Throws std::domain_error on a disconnected graph.
int diameter(const Graph& g);

/// Cut vertices, found by DFS low-link.
VertexSet articulation_points(const Graph& g);

bool is_tree(const Graph& g);
bool is_path(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced by s, relabelled 0..|s|-1 in increasing vertex order.
/// Throws std::invalid_argument if s is empty or leaves the vertex range.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Applies a vertex relabelling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace minrank

#endif  // MINRANK_GRAPH_HPP
