#include "persista/wrcf.hpp"

#include <stdexcept>

namespace persista {

namespace {

// Adds every size-k subset of the sorted clique as a simplex at value t.
void add_combinations(FilteredComplex& K, const std::vector<VertexId>& clique,
                      std::size_t k, double t) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<VertexId> vs(k);
        for (std::size_t i = 0; i < k; ++i) vs[i] = clique[idx[i]];
        K.add_simplex(Simplex(std::move(vs)), t);
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == clique.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

FilteredComplex build_wrcf(const WeightedGraph& g, WeightOrder order, int max_dim,
                           const std::optional<std::vector<double>>& vertex_births) {
    if (max_dim < 1) throw std::invalid_argument("max_dim must be >= 1");
    if (vertex_births && static_cast<int>(vertex_births->size()) != g.node_count())
        throw std::invalid_argument("vertex_births size must equal node count");

    auto dir = order == WeightOrder::Ascending ? FiltrationDirection::Ascending
                                               : FiltrationDirection::Descending;
    FilteredComplex K(dir);

    const auto thresholds = g.distinct_weights(order);
    const double start = thresholds.empty() ? 0.0 : thresholds.front();
    for (VertexId v = 0; v < g.node_count(); ++v) {
        K.add_simplex(Simplex{v}, vertex_births ? (*vertex_births)[v] : start);
        K.set_vertex_label(v, g.label(v));
    }

    // Cliques are truncated to faces of dimension <= max_dim + 1; one
    // dimension above the homology cap is needed to kill cycles.
    const std::size_t max_size = static_cast<std::size_t>(max_dim) + 2;
    for (double t : thresholds) {
        AdjacencyGraph ag = threshold_graph(g, t, order);
        for (const auto& clique : maximal_cliques(ag)) {
            std::size_t top = std::min(clique.size(), max_size);
            for (std::size_t k = 2; k <= top; ++k) add_combinations(K, clique, k, t);
        }
    }

    K.canonicalize();
    return K;
}

}  // namespace persista
