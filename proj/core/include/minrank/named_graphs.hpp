#ifndef MINRANK_NAMED_GRAPHS_HPP
#define MINRANK_NAMED_GRAPHS_HPP

#include "minrank/graph.hpp"

namespace minrank {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int leaves);
Graph empty_graph(int n);

}  // namespace minrank

#endif  // MINRANK_NAMED_GRAPHS_HPP
