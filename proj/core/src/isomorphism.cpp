#include "minrank/isomorphism.hpp"

#include <algorithm>

namespace minrank {
namespace {

class Matcher {
public:
    Matcher(const Graph& g, const Graph& h) : g_(g), h_(h) {
        // Place high-degree vertices first; they constrain the search most.
        order_.resize(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) order_[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        image_.assign(order_.size(), -1);
    }

    std::optional<std::vector<int>> run() {
        if (extend(0, VertexSet{})) return image_;
        return std::nullopt;
    }

private:
    bool extend(std::size_t depth, VertexSet used) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        for (int w = 0; w < h_.order(); ++w) {
            if (used.contains(w) || h_.degree(w) != g_.degree(v)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const int u = order_[k];
                ok = g_.has_edge(u, v) == h_.has_edge(image_[static_cast<std::size_t>(u)], w);
            }
            if (!ok) continue;
            image_[static_cast<std::size_t>(v)] = w;
            VertexSet next = used;
            next.insert(w);
            if (extend(depth + 1, next)) return true;
            image_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> order_;
    std::vector<int> image_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    return Matcher(g, h).run();
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

bool contains_induced(const Graph& g, const Graph& pattern) {
    if (pattern.order() > g.order()) return false;
    if (pattern.order() == 0) return true;
    const int want_edges = pattern.size();
    return for_each_subset_of_size(g.vertices(), pattern.order(), [&](VertexSet s) {
        const Graph sub = induced_subgraph(g, s);
        return sub.size() == want_edges && is_isomorphic(sub, pattern);
    });
}

}  // namespace minrank
