#include "persista/cliques.hpp"

#include <algorithm>

namespace persista {

namespace {

using VSet = std::vector<VertexId>;  // sorted

VSet intersect(const VSet& a, const VSet& b) {
    VSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void bron_kerbosch(VSet& r, VSet p, VSet x,
                   const std::vector<std::vector<VertexId>>& adj,
                   std::vector<VSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P ∪ X with most neighbors in P.
    VertexId pivot = -1;
    std::size_t best = 0;
    for (const VSet* s : {&p, &x}) {
        for (VertexId u : *s) {
            std::size_t deg = intersect(p, adj[u]).size();
            if (pivot < 0 || deg > best) {
                pivot = u;
                best = deg;
            }
        }
    }
    VSet candidates;
    std::set_difference(p.begin(), p.end(), adj[pivot].begin(), adj[pivot].end(),
                        std::back_inserter(candidates));
    for (VertexId v : candidates) {
        r.push_back(v);
        bron_kerbosch(r, intersect(p, adj[v]), intersect(x, adj[v]), adj, out);
        r.pop_back();
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

std::vector<std::vector<VertexId>> maximal_cliques(const AdjacencyGraph& g) {
    auto adj = g.adjacency();
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    VSet p(g.vertex_count);
    for (int i = 0; i < g.vertex_count; ++i) p[i] = i;
    std::vector<VSet> out;
    VSet r;
    bron_kerbosch(r, std::move(p), {}, adj, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace persista
