#pragma once

#include <vector>

#include "persista/complex.hpp"
#include "persista/pointcloud.hpp"

namespace persista {

// How the increasing distance sequence is chosen. AllPairwise uses the exact
// pairwise distances as filtration values; the other kinds snap each simplex
// value up to the smallest scheduled epsilon at or above its diameter
// (simplices with no such epsilon are excluded).
struct EpsilonSchedule {
    enum class Kind { AllPairwise, Explicit, UniformGrid };

    Kind kind = Kind::AllPairwise;
    std::vector<double> values;  // Explicit: strictly increasing, positive
    int steps = 0;               // UniformGrid

    static EpsilonSchedule all_pairwise() { return {}; }
    static EpsilonSchedule explicit_steps(std::vector<double> eps);
    static EpsilonSchedule uniform_grid(int steps);
};

// Vietoris-Rips filtration: a simplex enters at its diameter (max pairwise
// distance among its vertices) provided the diameter is at most eps_max.
// Vertices enter at 0; simplices up to dimension max_dim + 1.
FilteredComplex build_vr(const PointCloud& pc, Metric m, double eps_max, int max_dim,
                         const EpsilonSchedule& sched = EpsilonSchedule::all_pairwise());

// Same construction straight from a distance matrix.
FilteredComplex build_vr(const DistanceMatrix& dist, double eps_max, int max_dim,
                         const EpsilonSchedule& sched = EpsilonSchedule::all_pairwise());

}  // namespace persista
