#ifndef MINRANK_MINORS_HPP
#define MINRANK_MINORS_HPP

#include "minrank/graph.hpp"

namespace minrank {

/// True iff h is a minor of g.
///
/// Enumerates every way to carve disjoint branch sets out of g (each vertex is
/// dropped, joins an open set, or opens a new one), keeps the carvings with
/// exactly h.order() connected sets, and asks whether h embeds as a spanning
/// subgraph of the quotient graph. The number of carvings grows like the Bell
/// numbers, so this is intended for g of order <= 10 or so.
bool has_minor(const Graph& g, const Graph& h);

/// No K5 and no K3,3 minor.
bool is_planar(const Graph& g);

/// No K4 and no K2,3 minor.
bool is_outerplanar(const Graph& g);

}  // namespace minrank

#endif  // MINRANK_MINORS_HPP
