#include "minrank/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace minrank {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxOrder) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0..64");
    }
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside graph of order " +
                                    std::to_string(order()));
    }
}

int Graph::size() const {
    int twice = 0;
    for (auto row : adj_) twice += row.size();
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u) {
        for_each_vertex(neighbors(u), [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d;
    d.reserve(adj_.size());
    for (auto row : adj_) d.push_back(row.size());
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (auto row : adj_) best = std::max(best, row.size());
    return best;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int best = kMaxOrder;
    for (auto row : adj_) best = std::min(best, row.size());
    return best;
}

VertexSet reachable(const Graph& g, int start, VertexSet within) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet comp = reachable(g, left.front(), left);
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

int diameter(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("diameter of a disconnected graph");
    const VertexSet all = g.vertices();
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        VertexSet seen = VertexSet::single(s);
        VertexSet frontier = seen;
        int dist = 0;
        while (seen != all) {
            VertexSet next;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next - seen;
            seen |= frontier;
            ++dist;
        }
        best = std::max(best, dist);
    }
    return best;
}

VertexSet articulation_points(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    VertexSet cut;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        const auto vi = static_cast<std::size_t>(v);
        disc[vi] = low[vi] = timer++;
        int children = 0;
        for_each_vertex(g.neighbors(v), [&](int w) {
            const auto wi = static_cast<std::size_t>(w);
            if (disc[wi] < 0) {
                ++children;
                dfs(w, v);
                low[vi] = std::min(low[vi], low[wi]);
                if (parent >= 0 && low[wi] >= disc[vi]) cut.insert(v);
            } else if (w != parent) {
                low[vi] = std::min(low[vi], disc[wi]);
            }
        });
        if (parent < 0 && children > 1) cut.insert(v);
    };

    for (int v = 0; v < g.order(); ++v) {
        if (disc[static_cast<std::size_t>(v)] < 0) dfs(v, -1);
    }
    return cut;
}

bool is_tree(const Graph& g) {
    return g.order() > 0 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("induced subgraph on an empty vertex set");
    if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("vertex set exceeds graph order");
    const std::vector<int> keep = s.to_vector();
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace minrank
