#ifndef MINRANK_ISOMORPHISM_HPP
#define MINRANK_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

/// An adjacency-preserving bijection g -> h (result[v] is the image of v),
/// or nullopt. Degree-sequence prefilter followed by backtracking; meant for
/// small orders.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

/// True iff some vertex subset of g induces a copy of pattern.
bool contains_induced(const Graph& g, const Graph& pattern);

}  // namespace minrank

#endif  // MINRANK_ISOMORPHISM_HPP
