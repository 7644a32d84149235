#ifndef MINRANK_CLIQUE_COVER_HPP
#define MINRANK_CLIQUE_COVER_HPP

#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

/// A minimum edge clique cover drawn from the maximal cliques of g
/// (exact branch and bound). Empty for edgeless graphs.
std::vector<VertexSet> minimum_clique_cover(const Graph& g);

/// cc(g): fewest cliques whose edges cover E(g).
int clique_cover_number(const Graph& g);

}  // namespace minrank

#endif  // MINRANK_CLIQUE_COVER_HPP
