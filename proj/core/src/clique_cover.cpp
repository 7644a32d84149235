#include "minrank/clique_cover.hpp"

#include <algorithm>

#include "minrank/cliques.hpp"

namespace minrank {
namespace {

int edges_in(VertexSet s) {
    const int k = s.size();
    return k * (k - 1) / 2;
}

class CoverSearch {
public:
    explicit CoverSearch(const Graph& g) : g_(g) {
        for (VertexSet c : maximal_cliques(g)) {
            if (c.size() >= 2) {
                cliques_.push_back(c);
                max_clique_edges_ = std::max(max_clique_edges_, edges_in(c));
            }
        }
    }

    std::vector<VertexSet> run() {
        // Covering every edge by itself is always feasible.
        best_count_ = g_.size() + 1;
        std::vector<VertexSet> uncovered(static_cast<std::size_t>(g_.order()));
        for (int v = 0; v < g_.order(); ++v) uncovered[static_cast<std::size_t>(v)] = g_.neighbors(v);
        search(uncovered, g_.size());
        return best_;
    }

private:
    void search(const std::vector<VertexSet>& uncovered, int uncovered_edges) {
        const int count = static_cast<int>(chosen_.size());
        if (uncovered_edges == 0) {
            if (count < best_count_) {
                best_count_ = count;
                best_ = chosen_;
            }
            return;
        }
        const int needed = (uncovered_edges + max_clique_edges_ - 1) / max_clique_edges_;
        if (count + needed >= best_count_) return;

        // Branch on the first uncovered edge: some chosen clique must contain it.
        int u = 0;
        while (uncovered[static_cast<std::size_t>(u)].empty()) ++u;
        const int w = uncovered[static_cast<std::size_t>(u)].front();
        const VertexSet edge = VertexSet::single(u) | VertexSet::single(w);

        for (VertexSet c : cliques_) {
            if (!edge.is_subset_of(c)) continue;
            std::vector<VertexSet> next = uncovered;
            int removed = 0;
            for_each_vertex(c, [&](int v) {
                auto& row = next[static_cast<std::size_t>(v)];
                removed += (row & c).size();
                row -= c;
            });
            chosen_.push_back(c);
            search(next, uncovered_edges - removed / 2);
            chosen_.pop_back();
        }
    }

    const Graph& g_;
    std::vector<VertexSet> cliques_;
    int max_clique_edges_ = 1;
    std::vector<VertexSet> chosen_;
    std::vector<VertexSet> best_;
    int best_count_ = 0;
};

}  // namespace

std::vector<VertexSet> minimum_clique_cover(const Graph& g) {
    if (g.size() == 0) return {};
    return CoverSearch(g).run();
}

int clique_cover_number(const Graph& g) { return static_cast<int>(minimum_clique_cover(g).size()); }

}  // namespace minrank
