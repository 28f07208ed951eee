#include "persista/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace persista {

bool AdjacencyGraph::has_edge(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<std::vector<VertexId>> AdjacencyGraph::adjacency() const {
    std::vector<std::vector<VertexId>> adj(vertex_count);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

VertexId WeightedGraph::add_node(const std::string& label) {
    labels_.push_back(label);
    return static_cast<VertexId>(labels_.size()) - 1;
}

void WeightedGraph::add_edge(VertexId a, VertexId b, double weight) {
    if (a == b) throw std::invalid_argument("self-loop on node " + label(a));
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= node_count()) throw std::out_of_range("edge endpoint out of range");
    if (has_edge(a, b))
        throw std::invalid_argument("duplicate edge " + label(a) + "-" + label(b));
    if (!std::isfinite(weight)) throw std::invalid_argument("non-finite edge weight");
    edges_.push_back({a, b, weight});
}

void WeightedGraph::add_edge(const std::string& la, const std::string& lb, double weight) {
    add_edge(node_id(la), node_id(lb), weight);
}

VertexId WeightedGraph::node_id(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("unknown node label: " + label);
    return static_cast<VertexId>(it - labels_.begin());
}

bool WeightedGraph::has_node(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

bool WeightedGraph::has_edge(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.a == a && e.b == b; });
}

std::vector<double> WeightedGraph::distinct_weights(WeightOrder order) const {
    std::vector<double> w;
    w.reserve(edges_.size());
    for (const Edge& e : edges_) w.push_back(e.weight);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (order == WeightOrder::Descending) std::reverse(w.begin(), w.end());
    return w;
}

WeightedGraph WeightedGraph::remove_edges(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    std::vector<std::string>* warnings) const {
    std::vector<std::pair<VertexId, VertexId>> drop;
    for (const auto& [la, lb] : pairs) {
        VertexId a = node_id(la), b = node_id(lb);  // throws on unknown label
        if (a > b) std::swap(a, b);
        if (!has_edge(a, b)) {
            if (warnings)
                warnings->push_back("no edge between " + la + " and " + lb + "; ignored");
            continue;
        }
        drop.emplace_back(a, b);
    }
    WeightedGraph out;
    out.labels_ = labels_;
    for (const Edge& e : edges_) {
        if (std::find(drop.begin(), drop.end(), std::make_pair(e.a, e.b)) == drop.end())
            out.edges_.push_back(e);
    }
    return out;
}

AdjacencyGraph threshold_graph(const WeightedGraph& g, double t, WeightOrder order) {
    AdjacencyGraph out;
    out.vertex_count = g.node_count();
    for (const auto& e : g.edges()) {
        bool keep = order == WeightOrder::Ascending ? e.weight <= t : e.weight >= t;
        if (keep) out.edges.emplace_back(e.a, e.b);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace persista
