#pragma once

#include <string>
#include <utility>
#include <vector>

#include "persista/simplex.hpp"

namespace persista {

enum class WeightOrder { Ascending, Descending };

// Simple undirected unweighted graph over dense vertex ids.
struct AdjacencyGraph {
    int vertex_count = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;  // a < b, sorted, unique

    bool has_edge(VertexId a, VertexId b) const;
    std::vector<std::vector<VertexId>> adjacency() const;
};

// Labeled nodes plus weighted edges (weights are years for the EU network).
class WeightedGraph {
public:
    struct Edge {
        VertexId a, b;  // a < b
        double weight;
    };

    VertexId add_node(const std::string& label);
    void add_edge(VertexId a, VertexId b, double weight);
    void add_edge(const std::string& la, const std::string& lb, double weight);

    int node_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    VertexId node_id(const std::string& label) const;  // throws if unknown
    bool has_node(const std::string& label) const;
    bool has_edge(VertexId a, VertexId b) const;

    // Distinct edge weights, sorted per order (Ascending: increasing).
    std::vector<double> distinct_weights(WeightOrder order) const;

    // Removes the named edges, keeping all nodes. Unknown label throws;
    // a pair with no edge is a no-op (reported via the optional warning sink).
    WeightedGraph remove_edges(
        const std::vector<std::pair<std::string, std::string>>& pairs,
        std::vector<std::string>* warnings = nullptr) const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

// Keeps edges with weight <= t (Ascending) or >= t (Descending); all nodes kept.
AdjacencyGraph threshold_graph(const WeightedGraph& g, double t, WeightOrder order);

}  // namespace persista
