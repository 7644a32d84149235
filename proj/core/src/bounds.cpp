#include "minrank/bounds.hpp"

#include <algorithm>

#include "minrank/clique_cover.hpp"
#include "minrank/minors.hpp"
#include "minrank/tree.hpp"
#include "minrank/zero_forcing.hpp"

namespace minrank {

BoundValue zfs_lower_bound(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    return g.order() - zero_forcing_number(g);
}

BoundValue diameter_lower_bound(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    return diameter(g);
}

BoundValue clique_cover_upper_bound(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    return clique_cover_number(g);
}

BoundValue np_upper_bound(const Graph& g) {
    if (!is_connected(g) || is_planar(g)) return std::nullopt;
    return g.order() - 4;
}

BoundValue nop_upper_bound(const Graph& g) {
    if (!is_connected(g) || is_outerplanar(g)) return std::nullopt;
    return g.order() - 3;
}

BoundValue path_upper_bound(const Graph& g) {
    if (!is_connected(g) || is_path(g)) return std::nullopt;
    return g.order() - 2;
}

namespace {

BoundsRow combine_connected(const Graph& g, const ForbiddenList& list) {
    BoundsRow row;
    row.order = g.order();
    row.size = g.size();
    row.con = true;
    row.zfs_lb = zfs_lower_bound(g);
    row.diam_lb = diameter_lower_bound(g);
    row.cc_ub = clique_cover_upper_bound(g);
    row.np_ub = np_upper_bound(g);
    row.nop_ub = nop_upper_bound(g);
    row.path_ub = path_upper_bound(g);
    row.is_flag = is_forbidden_mr2(g, list);
    row.cv = !articulation_points(g).empty();
    row.tree = is_tree(g);

    row.lb = std::max({*row.zfs_lb, *row.diam_lb, *row.is_flag ? 3 : 0});

    int ub = g.order() - 1;
    for (const BoundValue& b : {row.cc_ub, row.np_ub, row.nop_ub, row.path_ub}) {
        if (b) ub = std::min(ub, *b);
    }
    if (!*row.is_flag) ub = std::min(ub, 2);
    if (row.tree) {
        const int tree_mr = tree_minimum_rank(g);
        ub = std::min(ub, tree_mr);
        row.mr_exact = tree_mr;
    }
    row.ub = ub;
    if (row.lb == row.ub) row.mr_exact = row.lb;
    return row;
}

}  // namespace

BoundsRow combine(const Graph& g, const ForbiddenList& list) {
    const auto comps = components(g);
    if (comps.size() == 1) return combine_connected(g, list);

    BoundsRow row;
    row.order = g.order();
    row.size = g.size();
    int exact_sum = 0;
    bool all_exact = true;
    for (VertexSet c : comps) {
        const BoundsRow part = combine_connected(induced_subgraph(g, c), list);
        row.lb += part.lb;
        row.ub += part.ub;
        if (part.mr_exact) {
            exact_sum += *part.mr_exact;
        } else {
            all_exact = false;
        }
    }
    if (all_exact) row.mr_exact = exact_sum;
    return row;
}

}  // namespace minrank
