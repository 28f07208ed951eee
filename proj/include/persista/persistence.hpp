#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "persista/complex.hpp"

namespace persista {

inline constexpr std::size_t kNoPosition = std::numeric_limits<std::size_t>::max();

// GF(2) boundary matrix in filtration order: column j lists the positions of
// the codimension-1 faces of simplex j, sorted ascending. All entries are
// strictly below the column's own index; vertex columns are empty.
struct BoundaryMatrix {
    std::vector<std::vector<std::uint32_t>> columns;
    std::vector<int> dims;
    std::vector<double> values;
    FiltrationDirection direction = FiltrationDirection::Ascending;

    std::size_t size() const { return columns.size(); }
};

BoundaryMatrix boundary_matrix(const FilteredComplex& K);

enum class ReductionStrategy { Naive, Clearing };

struct PersistencePair {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;  // +/- infinity for essential pairs, per direction
    std::size_t birth_pos = kNoPosition;
    std::size_t death_pos = kNoPosition;

    bool essential() const { return death_pos == kNoPosition; }
    bool zero_length() const { return !essential() && birth == death; }
};

// Reduction output: R (each nonzero column has a unique lowest entry), the
// original boundary columns, per-birth representative cycles, and the
// birth-death pairing. The pairing is independent of the legal reduction
// strategy used.
struct ReducedBoundaryMatrix {
    FiltrationDirection direction = FiltrationDirection::Ascending;
    std::vector<std::vector<std::uint32_t>> reduced;
    std::vector<std::vector<std::uint32_t>> boundary;
    // cycles[i] is a GF(2) chain of positions summing to a cycle born at i;
    // populated exactly for positions whose reduced column is zero.
    std::vector<std::vector<std::uint32_t>> cycles;
    std::vector<int> dims;
    std::vector<double> values;
    std::vector<PersistencePair> pairs;  // includes zero-length pairs

    std::size_t size() const { return reduced.size(); }
};

ReducedBoundaryMatrix reduce(const BoundaryMatrix& M,
                             ReductionStrategy strategy = ReductionStrategy::Naive);

struct Bar {
    double birth = 0.0;
    double death = 0.0;
    std::size_t birth_pos = kNoPosition;
    std::size_t death_pos = kNoPosition;

    bool finite() const { return death_pos != kNoPosition; }
};

// Per-dimension multiset of intervals, sorted by (birth, death, birth
// position) with infinite deaths last.
struct Barcode {
    FiltrationDirection direction = FiltrationDirection::Ascending;
    int max_dim = 0;
    std::vector<std::vector<Bar>> bars;  // indexed by dimension, 0..max_dim

    const std::vector<Bar>& dim(int d) const { return bars.at(d); }
    std::size_t total_bars() const;
};

Barcode barcode_from_reduction(const ReducedBoundaryMatrix& R, int max_dim,
                               bool include_zero_length = false);

// Reduces K's boundary matrix and extracts bars for dimensions 0..max_dim.
// Zero-length bars are suppressed unless requested.
Barcode barcode(const FilteredComplex& K, int max_dim, bool include_zero_length = false,
                ReductionStrategy strategy = ReductionStrategy::Naive);

// Number of bars in the given dimension alive at filtration value t.
int betti_at(const Barcode& b, double t, int dim);

struct Representative {
    PersistencePair pair;
    std::vector<std::size_t> chain;  // positions into the complex
};

// A cycle born with the pair. Finite pairs use the killer's reduced column;
// essential pairs use the tracked cycle. Dimension-0 essential pairs return
// the vertex set of the component instead.
Representative representative(const ReducedBoundaryMatrix& R, const PersistencePair& p);

}  // namespace persista
