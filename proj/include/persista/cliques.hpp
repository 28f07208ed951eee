#pragma once

#include <vector>

#include "persista/graph.hpp"

namespace persista {

// All inclusion-maximal cliques of a simple undirected graph, each as a
// sorted vertex set, output sorted lexicographically. Bron-Kerbosch with
// pivoting; exact. Isolated vertices count as maximal 1-cliques.
std::vector<std::vector<VertexId>> maximal_cliques(const AdjacencyGraph& g);

}  // namespace persista
