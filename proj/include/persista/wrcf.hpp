#pragma once

#include <optional>
#include <vector>

#include "persista/cliques.hpp"
#include "persista/complex.hpp"
#include "persista/graph.hpp"

namespace persista {

// Weight rank clique filtration: threshold the graph at each distinct edge
// weight, take maximal cliques, and register every clique face up to
// dimension max_dim + 1 at the first threshold where it appears. All vertices
// enter at the filtration start value unless vertex_births gives one value
// per node (e.g. accession years).
FilteredComplex build_wrcf(const WeightedGraph& g, WeightOrder order, int max_dim,
                           const std::optional<std::vector<double>>& vertex_births = std::nullopt);

}  // namespace persista
