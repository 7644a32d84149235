#include "minrank/cliques.hpp"

#include <algorithm>

namespace minrank {
namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty()) {
        if (x.empty()) out.push_back(r);
        return;
    }
    // Pivot on the vertex of P u X with the most neighbours in P.
    int pivot = -1;
    int best = -1;
    for_each_vertex(p | x, [&](int u) {
        const int c = (g.neighbors(u) & p).size();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    for_each_vertex(p - g.neighbors(pivot), [&](int v) {
        const VertexSet nv = g.neighbors(v);
        bron_kerbosch(g, r | VertexSet::single(v), p & nv, x & nv, out);
        p.erase(v);
        x.insert(v);
    });
}

}  // namespace

bool is_clique(const Graph& g, VertexSet s) {
    bool ok = true;
    for_each_vertex(s, [&](int v) { ok = ok && (s - VertexSet::single(v)).is_subset_of(g.neighbors(v)); });
    return ok;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.order() == 0) return out;
    bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace minrank
