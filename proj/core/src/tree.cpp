#include "minrank/tree.hpp"

#include <stdexcept>
#include <vector>

namespace minrank {
namespace {

void require_tree(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("path cover number is only defined here for trees");
}

bool induces_path(const Graph& t, VertexSet s) {
    int edges = 0;
    bool low_degree = true;
    for_each_vertex(s, [&](int v) {
        const int d = (t.neighbors(v) & s).size();
        edges += d;
        low_degree = low_degree && d <= 2;
    });
    // Inside a tree, a connected induced subgraph is a subtree; max degree 2 makes it a path.
    return low_degree && edges / 2 == s.size() - 1 && reachable(t, s.front(), s) == s;
}

bool degree_at_most_two(const Graph& t, VertexSet s) {
    bool ok = true;
    for_each_vertex(s, [&](int v) { ok = ok && (t.neighbors(v) & s).size() <= 2; });
    return ok;
}

}  // namespace

int path_cover_exhaustive(const Graph& t) {
    require_tree(t);
    const int n = t.order();
    std::vector<VertexSet> blocks;
    int best = n;
    auto place = [&](auto&& self, int v) -> void {
        if (static_cast<int>(blocks.size()) >= best) return;
        if (v == n) {
            for (VertexSet b : blocks)
                if (!induces_path(t, b)) return;
            best = static_cast<int>(blocks.size());
            return;
        }
        for (std::size_t i = 0, open = blocks.size(); i < open; ++i) {
            blocks[i].insert(v);
            if (degree_at_most_two(t, blocks[i])) self(self, v + 1);
            blocks[i].erase(v);
        }
        blocks.push_back(VertexSet::single(v));
        self(self, v + 1);
        blocks.pop_back();
    };
    place(place, 0);
    return best;
}

int path_cover_leaf_stripping(const Graph& t) {
    require_tree(t);
    const int n = t.order();
    // BFS order from vertex 0; process in reverse so children precede parents.
    std::vector<int> order{0};
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    VertexSet seen = VertexSet::single(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        for_each_vertex(t.neighbors(v) - seen, [&](int w) {
            parent[static_cast<std::size_t>(w)] = v;
            seen.insert(w);
            order.push_back(w);
        });
    }
    // open_end[v]: v is the endpoint of a path that can still be extended to its parent.
    std::vector<int> open_children(static_cast<std::size_t>(n), 0);
    int paths = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        const int open = open_children[static_cast<std::size_t>(v)];
        bool extendable = false;
        if (open == 0) {
            ++paths;
            extendable = true;
        } else if (open == 1) {
            extendable = true;
        } else {
            // Joining two child paths through v merges them into one.
            --paths;
        }
        const int p = parent[static_cast<std::size_t>(v)];
        if (extendable && p >= 0) ++open_children[static_cast<std::size_t>(p)];
    }
    return paths;
}

int tree_path_cover_number(const Graph& t) {
    return t.order() <= kExhaustivePathCoverOrder ? path_cover_exhaustive(t) : path_cover_leaf_stripping(t);
}

int tree_minimum_rank(const Graph& t) { return t.order() - tree_path_cover_number(t); }

}  // namespace minrank
