#include "minrank/zero_forcing.hpp"

#include <algorithm>

namespace minrank {

VertexSet zf_closure(const Graph& g, VertexSet filled) {
    filled &= g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for_each_vertex(filled, [&](int v) {
            const VertexSet open = g.neighbors(v) - filled;
            if (open.size() == 1) {
                filled |= open;
                changed = true;
            }
        });
    }
    return filled;
}

namespace {

VertexSet component_minimum(const Graph& g, VertexSet comp) {
    if (comp.size() == 1) return comp;
    // Z >= minimum degree within the component (every vertex of a connected
    // component of order >= 2 has its full neighbourhood inside it).
    int lower = kMaxOrder;
    for_each_vertex(comp, [&](int v) { lower = std::min(lower, g.degree(v)); });
    lower = std::max(lower, 1);
    for (int k = lower; k <= comp.size(); ++k) {
        VertexSet found;
        const bool ok = for_each_subset_of_size(comp, k, [&](VertexSet s) {
            if (comp.is_subset_of(zf_closure(g, s))) {
                found = s;
                return true;
            }
            return false;
        });
        if (ok) return found;
    }
    return comp;
}

}  // namespace

VertexSet minimum_zero_forcing_set(const Graph& g) {
    VertexSet out;
    for (VertexSet comp : components(g)) out |= component_minimum(g, comp);
    return out;
}

int zero_forcing_number(const Graph& g) { return minimum_zero_forcing_set(g).size(); }

}  // namespace minrank
