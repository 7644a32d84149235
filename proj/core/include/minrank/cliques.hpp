#ifndef MINRANK_CLIQUES_HPP
#define MINRANK_CLIQUES_HPP

#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

bool is_clique(const Graph& g, VertexSet s);

/// All maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted by bitset value.
/// Isolated vertices appear as singleton cliques.
std::vector<VertexSet> maximal_cliques(const Graph& g);

}  // namespace minrank

#endif  // MINRANK_CLIQUES_HPP
