#include "persista/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace persista {

BoundaryMatrix boundary_matrix(const FilteredComplex& K) {
    if (!K.is_canonical()) throw std::invalid_argument("complex must be canonicalized");
    BoundaryMatrix M;
    M.direction = K.direction();
    M.columns.resize(K.size());
    M.dims.resize(K.size());
    M.values.resize(K.size());
    for (std::size_t j = 0; j < K.size(); ++j) {
        M.dims[j] = K.cell(j).simplex.dim();
        M.values[j] = K.cell(j).value;
        for (std::size_t f : K.face_positions(j))
            M.columns[j].push_back(static_cast<std::uint32_t>(f));
    }
    return M;
}

namespace {

void xor_into(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    a.swap(out);
}

double infinite_death(FiltrationDirection dir) {
    return dir == FiltrationDirection::Ascending
               ? std::numeric_limits<double>::infinity()
               : -std::numeric_limits<double>::infinity();
}

// Reduces column j in place against earlier pinned columns, tracking the
// applied operations in V.
void reduce_column(std::size_t j, std::vector<std::vector<std::uint32_t>>& R,
                   std::vector<std::vector<std::uint32_t>>& V,
                   const std::vector<std::size_t>& low_to_col) {
    while (!R[j].empty()) {
        std::size_t k = low_to_col[R[j].back()];
        if (k == kNoPosition) break;
        xor_into(R[j], R[k]);
        xor_into(V[j], V[k]);
    }
}

void collect_pairs(ReducedBoundaryMatrix& out) {
    const std::size_t n = out.size();
    std::vector<bool> is_birth_of_finite(n, false);
    for (std::size_t j = 0; j < n; ++j)
        if (!out.reduced[j].empty()) is_birth_of_finite[out.reduced[j].back()] = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (!out.reduced[j].empty()) {
            std::size_t i = out.reduced[j].back();
            out.pairs.push_back({out.dims[i], out.values[i], out.values[j], i, j});
        } else if (!is_birth_of_finite[j]) {
            out.pairs.push_back(
                {out.dims[j], out.values[j], infinite_death(out.direction), j, kNoPosition});
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const PersistencePair& a, const PersistencePair& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.birth_pos < b.birth_pos;
              });
}

}  // namespace

ReducedBoundaryMatrix reduce(const BoundaryMatrix& M, ReductionStrategy strategy) {
    const std::size_t n = M.size();
    ReducedBoundaryMatrix out;
    out.direction = M.direction;
    out.boundary = M.columns;
    out.dims = M.dims;
    out.values = M.values;
    out.reduced = M.columns;
    out.cycles.resize(n);

    std::vector<std::vector<std::uint32_t>> V(n);
    for (std::size_t j = 0; j < n; ++j) V[j] = {static_cast<std::uint32_t>(j)};
    std::vector<std::size_t> low_to_col(n, kNoPosition);

    if (strategy == ReductionStrategy::Naive) {
        for (std::size_t j = 0; j < n; ++j) {
            reduce_column(j, out.reduced, V, low_to_col);
            if (!out.reduced[j].empty())
                low_to_col[out.reduced[j].back()] = j;
            else
                out.cycles[j] = V[j];
        }
    } else {
        // Clearing: work top dimension down; a column paired as a birth is
        // known to reduce to zero and its cycle is the killer's reduced
        // column, so it is skipped entirely.
        int top = 0;
        for (std::size_t j = 0; j < n; ++j) top = std::max(top, M.dims[j]);
        std::vector<bool> cleared(n, false);
        for (int d = top; d >= 0; --d) {
            for (std::size_t j = 0; j < n; ++j) {
                if (M.dims[j] != d) continue;
                if (cleared[j]) {
                    out.reduced[j].clear();
                    continue;
                }
                reduce_column(j, out.reduced, V, low_to_col);
                if (!out.reduced[j].empty()) {
                    std::size_t i = out.reduced[j].back();
                    low_to_col[i] = j;
                    cleared[i] = true;
                    out.cycles[i] = out.reduced[j];
                } else {
                    out.cycles[j] = V[j];
                }
            }
        }
    }

    collect_pairs(out);
    return out;
}

std::size_t Barcode::total_bars() const {
    return std::accumulate(bars.begin(), bars.end(), std::size_t{0},
                           [](std::size_t n, const auto& v) { return n + v.size(); });
}

Barcode barcode_from_reduction(const ReducedBoundaryMatrix& R, int max_dim,
                               bool include_zero_length) {
    Barcode b;
    b.direction = R.direction;
    b.max_dim = max_dim;
    b.bars.resize(max_dim + 1);
    for (const PersistencePair& p : R.pairs) {
        if (p.dim > max_dim) continue;
        if (p.zero_length() && !include_zero_length) continue;
        b.bars[p.dim].push_back({p.birth, p.death, p.birth_pos, p.death_pos});
    }
    for (auto& v : b.bars) {
        std::sort(v.begin(), v.end(), [&](const Bar& x, const Bar& y) {
            if (x.birth != y.birth) return b.direction == FiltrationDirection::Ascending
                                               ? x.birth < y.birth
                                               : x.birth > y.birth;
            if (x.finite() != y.finite()) return x.finite();  // infinite last
            if (x.death != y.death) return b.direction == FiltrationDirection::Ascending
                                               ? x.death < y.death
                                               : x.death > y.death;
            return x.birth_pos < y.birth_pos;
        });
    }
    return b;
}

Barcode barcode(const FilteredComplex& K, int max_dim, bool include_zero_length,
                ReductionStrategy strategy) {
    return barcode_from_reduction(reduce(boundary_matrix(K), strategy), max_dim,
                                  include_zero_length);
}

int betti_at(const Barcode& b, double t, int dim) {
    if (dim < 0 || dim > b.max_dim) return 0;
    int count = 0;
    for (const Bar& bar : b.bars[dim]) {
        bool alive = b.direction == FiltrationDirection::Ascending
                         ? bar.birth <= t && t < bar.death
                         : bar.birth >= t && t > bar.death;
        if (alive) ++count;
    }
    return count;
}

Representative representative(const ReducedBoundaryMatrix& R, const PersistencePair& p) {
    Representative rep;
    rep.pair = p;
    if (p.dim == 0 && p.essential()) {
        // Whole component of the birth vertex in the final complex.
        std::vector<std::size_t> parent(R.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t j = 0; j < R.size(); ++j)
            if (R.dims[j] == 1)
                parent[find(R.boundary[j][0])] = find(R.boundary[j][1]);
        std::size_t root = find(p.birth_pos);
        for (std::size_t i = 0; i < R.size(); ++i)
            if (R.dims[i] == 0 && find(i) == root) rep.chain.push_back(i);
        return rep;
    }
    if (!p.essential()) {
        const auto& col = R.reduced[p.death_pos];
        rep.chain.assign(col.begin(), col.end());
        return rep;
    }
    // The tracked cycle can carry boundaries picked up during reduction.
    // Strip them greedily when doing so shrinks the chain; the class is
    // unchanged and every cell stays at or before the birth position.
    std::vector<std::uint32_t> chain = R.cycles[p.birth_pos];
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t q = 0; q < R.size(); ++q) {
            if (R.dims[q] != p.dim + 1 || R.reduced[q].empty()) continue;
            if (R.reduced[q].back() > p.birth_pos) continue;
            std::vector<std::uint32_t> alt;
            alt.reserve(chain.size() + R.reduced[q].size());
            std::set_symmetric_difference(chain.begin(), chain.end(),
                                          R.reduced[q].begin(), R.reduced[q].end(),
                                          std::back_inserter(alt));
            if (alt.size() < chain.size()) {
                chain.swap(alt);
                improved = true;
            }
        }
    }
    rep.chain.assign(chain.begin(), chain.end());
    return rep;
}

}  // namespace persista
