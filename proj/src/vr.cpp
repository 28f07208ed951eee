#include "persista/vr.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace persista {

EpsilonSchedule EpsilonSchedule::explicit_steps(std::vector<double> eps) {
    if (eps.empty()) throw std::invalid_argument("epsilon sequence is empty");
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (eps[i] <= 0.0) throw std::invalid_argument("epsilon values must be positive");
        if (i > 0 && eps[i] <= eps[i - 1])
            throw std::invalid_argument("epsilon sequence must be strictly increasing");
    }
    EpsilonSchedule s;
    s.kind = Kind::Explicit;
    s.values = std::move(eps);
    return s;
}

EpsilonSchedule EpsilonSchedule::uniform_grid(int steps) {
    if (steps < 1) throw std::invalid_argument("grid needs at least one step");
    EpsilonSchedule s;
    s.kind = Kind::UniformGrid;
    s.steps = steps;
    return s;
}

namespace {

struct Snapper {
    std::vector<double> grid;  // empty = identity (AllPairwise)

    std::optional<double> operator()(double diameter) const {
        if (grid.empty()) return diameter;
        auto it = std::lower_bound(grid.begin(), grid.end(), diameter);
        if (it == grid.end()) return std::nullopt;
        return *it;
    }
};

void extend(const DistanceMatrix& d, double eps_max, int max_size,
            const Snapper& snap, std::vector<VertexId>& current, double diameter,
            FilteredComplex& K) {
    const auto n = static_cast<VertexId>(d.size());
    for (VertexId next = current.back() + 1; next < n; ++next) {
        double diam = diameter;
        for (VertexId v : current) diam = std::max(diam, d(v, next));
        if (diam > eps_max) continue;
        auto value = snap(diam);
        if (!value) continue;
        current.push_back(next);
        K.add_simplex(Simplex(current), *value);
        if (static_cast<int>(current.size()) < max_size)
            extend(d, eps_max, max_size, snap, current, diam, K);
        current.pop_back();
    }
}

}  // namespace

FilteredComplex build_vr(const DistanceMatrix& dist, double eps_max, int max_dim,
                         const EpsilonSchedule& sched) {
    if (!(eps_max >= 0.0)) throw std::invalid_argument("eps_max must be nonnegative");
    if (max_dim < 1) throw std::invalid_argument("max_dim must be >= 1");

    Snapper snap;
    switch (sched.kind) {
        case EpsilonSchedule::Kind::AllPairwise:
            break;
        case EpsilonSchedule::Kind::Explicit:
            snap.grid = sched.values;
            break;
        case EpsilonSchedule::Kind::UniformGrid:
            for (int i = 1; i <= sched.steps; ++i)
                snap.grid.push_back(eps_max * i / sched.steps);
            break;
    }

    FilteredComplex K(FiltrationDirection::Ascending);
    std::vector<VertexId> current;
    for (VertexId v = 0; v < static_cast<VertexId>(dist.size()); ++v) {
        K.add_simplex(Simplex{v}, 0.0);
        current.assign(1, v);
        extend(dist, eps_max, max_dim + 2, snap, current, 0.0, K);
    }
    K.canonicalize();
    return K;
}

FilteredComplex build_vr(const PointCloud& pc, Metric m, double eps_max, int max_dim,
                         const EpsilonSchedule& sched) {
    FilteredComplex K = build_vr(pairwise_distances(pc, m), eps_max, max_dim, sched);
    for (VertexId v = 0; v < static_cast<VertexId>(pc.size()); ++v)
        K.set_vertex_label(v, pc.label(v));
    return K;
}

}  // namespace persista
