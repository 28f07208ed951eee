#pragma once

#include <random>
#include <utility>
#include <vector>

#include "persista/complex.hpp"
#include "persista/graph.hpp"
#include "persista/oracle.hpp"
#include "persista/pointcloud.hpp"

namespace persista::testing {

inline WeightedGraph random_graph(std::mt19937& rng, int max_nodes, double edge_prob,
                                  int max_weight = 10) {
    std::uniform_int_distribution<int> nd(1, max_nodes);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    std::uniform_int_distribution<int> wd(1, max_weight);
    int n = nd(rng);
    WeightedGraph g;
    for (int i = 0; i < n; ++i) g.add_node("v" + std::to_string(i));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (pd(rng) < edge_prob) g.add_edge(a, b, wd(rng));
    return g;
}

inline PointCloud random_cloud(std::mt19937& rng, int max_points) {
    std::uniform_int_distribution<int> nd(1, max_points);
    std::uniform_real_distribution<double> cd(-1.0, 1.0);
    int n = nd(rng);
    PointCloud pc(CoordinateKind::Planar);
    for (int i = 0; i < n; ++i) pc.add_point(cd(rng), cd(rng));
    return pc;
}

inline std::vector<std::pair<Simplex, double>> cells_of(const FilteredComplex& K) {
    std::vector<std::pair<Simplex, double>> out;
    for (const auto& c : K.cells()) out.emplace_back(c.simplex, c.value);
    return out;
}

// Distinct filtration values of K, in filtration order.
inline std::vector<double> filtration_values(const FilteredComplex& K) {
    std::vector<double> vals;
    for (const auto& c : K.cells())
        if (vals.empty() || vals.back() != c.value) vals.push_back(c.value);
    return vals;
}

inline int oracle_betti(const FilteredComplex& K, double t, int dim) {
    bool desc = K.direction() == FiltrationDirection::Descending;
    return oracle::betti_bruteforce(oracle::snapshot(cells_of(K), t, desc), dim);
}

}  // namespace persista::testing
