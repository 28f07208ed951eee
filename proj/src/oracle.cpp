#include "persista/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace persista {
namespace oracle {

SnapshotComplex snapshot(const std::vector<std::pair<Simplex, double>>& cells, double t,
                         bool descending) {
    SnapshotComplex K;
    for (const auto& [s, v] : cells)
        if (descending ? v >= t : v <= t) K.simplices.push_back(s);
    return K;
}

namespace {

// Rows are bitsets over 64-bit words.
using BitRow = std::vector<std::uint64_t>;

int rank_gf2(std::vector<BitRow> rows, std::size_t ncols) {
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t word = col / 64, bit = col % 64;
        std::size_t pivot = row;
        while (pivot < rows.size() && !((rows[pivot][word] >> bit) & 1)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != row && ((rows[r][word] >> bit) & 1))
                for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[row][w];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Dense boundary operator d_k as rows indexed by (k-1)-simplices, columns by
// k-simplices. Returns its rank; 0 when either side is empty.
int boundary_rank(const std::map<Simplex, std::size_t>& lower,
                  const std::vector<Simplex>& upper) {
    if (lower.empty() || upper.empty()) return 0;
    std::size_t words = (upper.size() + 63) / 64;
    std::vector<BitRow> rows(lower.size(), BitRow(words, 0));
    for (std::size_t c = 0; c < upper.size(); ++c) {
        for (const Simplex& f : faces(upper[c])) {
            auto it = lower.find(f);
            if (it == lower.end())
                throw std::invalid_argument("snapshot not closed under faces: missing " +
                                            f.to_string());
            rows[it->second][c / 64] |= std::uint64_t{1} << (c % 64);
        }
    }
    return rank_gf2(std::move(rows), upper.size());
}

}  // namespace

int betti_bruteforce(const SnapshotComplex& K, int dim) {
    if (dim < 0) throw std::invalid_argument("dimension must be non-negative");
    if (K.simplices.size() > (std::size_t{1} << 12))
        throw std::invalid_argument("oracle capped at 2^12 simplices");

    std::vector<Simplex> dk, dk1;
    std::map<Simplex, std::size_t> dkm1, dkm;
    for (const Simplex& s : K.simplices) {
        if (s.dim() == dim) {
            dkm.emplace(s, dkm.size());
            dk.push_back(s);
        } else if (s.dim() == dim - 1) {
            dkm1.emplace(s, dkm1.size());
        } else if (s.dim() == dim + 1) {
            dk1.push_back(s);
        }
    }
    int n_k = static_cast<int>(dk.size());
    int rank_dk = boundary_rank(dkm1, dk);
    int rank_dk1 = boundary_rank(dkm, dk1);
    return n_k - rank_dk - rank_dk1;  // dim ker - rank of next boundary
}

int components_unionfind(const AdjacencyGraph& g) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = g.vertex_count;
    for (auto [a, b] : g.edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components;
}

}  // namespace oracle
}  // namespace persista
