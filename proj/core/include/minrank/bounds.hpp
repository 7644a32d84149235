#ifndef MINRANK_BOUNDS_HPP
#define MINRANK_BOUNDS_HPP

#include <optional>

#include "minrank/forbidden.hpp"
#include "minrank/graph.hpp"

namespace minrank {

/// A bound that is either reported or left blank.
using BoundValue = std::optional<int>;

/// Every bound column for one graph, plus the combined bracket.
///
/// The per-column bounds are only reported for connected graphs; for a
/// disconnected graph they stay empty and lb/ub are sums over components.
struct BoundsRow {
    int order = 0;
    int size = 0;
    bool con = false;
    BoundValue zfs_lb;
    BoundValue diam_lb;
    BoundValue cc_ub;
    BoundValue np_ub;
    BoundValue nop_ub;
    BoundValue path_ub;
    std::optional<bool> is_flag;
    bool cv = false;
    bool tree = false;
    int lb = 0;
    int ub = 0;
    std::optional<int> mr_exact;

    friend bool operator==(const BoundsRow&, const BoundsRow&) = default;
};

// Column bounds. Each is blank for disconnected graphs.

/// order - Z(g).
BoundValue zfs_lower_bound(const Graph& g);
BoundValue diameter_lower_bound(const Graph& g);
BoundValue clique_cover_upper_bound(const Graph& g);
/// order - 4, reported only for nonplanar graphs.
BoundValue np_upper_bound(const Graph& g);
/// order - 3, reported only for graphs that are not outerplanar.
BoundValue nop_upper_bound(const Graph& g);
/// order - 2, reported only for graphs that are not paths.
BoundValue path_upper_bound(const Graph& g);

/// Combines the columns into lb/ub and, where they pin it, the exact minimum rank.
BoundsRow combine(const Graph& g, const ForbiddenList& list);

}  // namespace minrank

#endif  // MINRANK_BOUNDS_HPP
