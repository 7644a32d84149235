#include "minrank/minors.hpp"

#include <vector>

#include "minrank/named_graphs.hpp"

namespace minrank {
namespace {

/// Does h embed (not necessarily induced) into q, where both have the same order?
bool embeds_spanning(const Graph& h, const Graph& q) {
    const int n = h.order();
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    auto extend = [&](auto&& self, int v, VertexSet used) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used.contains(w) || q.degree(w) < h.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (h.has_edge(u, v)) ok = q.has_edge(image[static_cast<std::size_t>(u)], w);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            if (self(self, v + 1, used | VertexSet::single(w))) return true;
        }
        return false;
    };
    return extend(extend, 0, VertexSet{});
}

class MinorSearch {
public:
    MinorSearch(const Graph& g, const Graph& h) : g_(g), h_(h), target_(h.order()) {}

    bool run() {
        if (target_ == 0) return true;
        if (g_.order() < target_ || g_.size() < h_.size()) return false;
        return assign(0);
    }

private:
    bool assign(int v) {
        const int open = static_cast<int>(sets_.size());
        // Not enough vertices left to open the remaining branch sets.
        if (target_ - open > g_.order() - v) return false;
        if (v == g_.order()) return open == target_ && check();

        if (assign(v + 1)) return true;  // drop v
        for (std::size_t i = 0; i < static_cast<std::size_t>(open); ++i) {
            sets_[i].insert(v);
            const bool hit = assign(v + 1);
            sets_[i].erase(v);
            if (hit) return true;
        }
        if (open < target_) {
            sets_.push_back(VertexSet::single(v));
            const bool hit = assign(v + 1);
            sets_.pop_back();
            if (hit) return true;
        }
        return false;
    }

    bool check() const {
        for (VertexSet s : sets_) {
            if (reachable(g_, s.front(), s) != s) return false;
        }
        Graph quotient(target_);
        for (int a = 0; a < target_; ++a) {
            VertexSet touch;
            for_each_vertex(sets_[static_cast<std::size_t>(a)], [&](int v) { touch |= g_.neighbors(v); });
            for (int b = a + 1; b < target_; ++b) {
                if (!(touch & sets_[static_cast<std::size_t>(b)]).empty()) quotient.add_edge(a, b);
            }
        }
        return quotient.size() >= h_.size() && embeds_spanning(h_, quotient);
    }

    const Graph& g_;
    const Graph& h_;
    int target_;
    std::vector<VertexSet> sets_;
};

}  // namespace

bool has_minor(const Graph& g, const Graph& h) { return MinorSearch(g, h).run(); }

bool is_planar(const Graph& g) {
    if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
    return !has_minor(g, complete_graph(5)) && !has_minor(g, complete_bipartite_graph(3, 3));
}

bool is_outerplanar(const Graph& g) {
    if (g.order() >= 2 && g.size() > 2 * g.order() - 3) return false;
    return !has_minor(g, complete_graph(4)) && !has_minor(g, complete_bipartite_graph(2, 3));
}

}  // namespace minrank
