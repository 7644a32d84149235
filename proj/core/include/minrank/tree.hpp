#ifndef MINRANK_TREE_HPP
#define MINRANK_TREE_HPP

#include "minrank/graph.hpp"

namespace minrank {

/// P(t): fewest vertex-disjoint paths covering a tree. Exhaustive search over
/// vertex partitions up to kExhaustivePathCoverOrder vertices, the greedy
/// below beyond that. Throws std::invalid_argument if t is not a tree.
int tree_path_cover_number(const Graph& t);

inline constexpr int kExhaustivePathCoverOrder = 10;

/// Exhaustive partition search; exponential, small trees only.
int path_cover_exhaustive(const Graph& t);

/// Leaf-up greedy: a vertex joins up to two child paths that still end at the
/// child; joining two closes the path. Linear time.
int path_cover_leaf_stripping(const Graph& t);

/// mr(t) = order - P(t).
int tree_minimum_rank(const Graph& t);

}  // namespace minrank

#endif  // MINRANK_TREE_HPP
