#ifndef MINRANK_ZERO_FORCING_HPP
#define MINRANK_ZERO_FORCING_HPP

#include "minrank/graph.hpp"

namespace minrank {

/// Closure of `filled` under the colour-change rule: a filled vertex with
/// exactly one unfilled neighbour forces that neighbour. Runs to a fixpoint.
VertexSet zf_closure(const Graph& g, VertexSet filled);

/// A minimum zero forcing set. Components are solved independently; within a
/// component, subsets are tried by increasing size in lexicographic order and
/// the first success is returned, so the result is deterministic.
VertexSet minimum_zero_forcing_set(const Graph& g);

/// Z(g), the size of a minimum zero forcing set.
int zero_forcing_number(const Graph& g);

}  // namespace minrank

#endif  // MINRANK_ZERO_FORCING_HPP
