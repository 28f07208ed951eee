#pragma once

#include <vector>

#include "persista/graph.hpp"
#include "persista/simplex.hpp"

namespace persista {
namespace oracle {

// A plain simplex set closed under faces, filtration forgotten.
struct SnapshotComplex {
    std::vector<Simplex> simplices;
};

// Restriction of a filtered complex's cells to values at (or, Descending,
// above) t. Assumes the cells already satisfy closure.
SnapshotComplex snapshot(const std::vector<std::pair<Simplex, double>>& cells, double t,
                         bool descending = false);

// Textbook beta_k = dim ker d_k - rank d_{k+1}, via dense GF(2) Gaussian
// elimination. Small inputs only; shares nothing with the reduction engine.
int betti_bruteforce(const SnapshotComplex& K, int dim);

// Connected-component count by union-find.
int components_unionfind(const AdjacencyGraph& g);

}  // namespace oracle
}  // namespace persista
