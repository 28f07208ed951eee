#pragma once

#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "persista/simplex.hpp"

namespace persista {

// Direction in which the filtration parameter advances. Ascending complexes
// grow as the value increases (VR, forward-in-time WRCF); Descending ones grow
// as it decreases (superlevel thresholding).
enum class FiltrationDirection { Ascending, Descending };

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An ordered set of simplices, each carrying a filtration value. Mutable while
// building; canonicalize() freezes the total order the reduction consumes.
class FilteredComplex {
public:
    struct Cell {
        Simplex simplex;
        double value;
    };

    explicit FilteredComplex(FiltrationDirection dir = FiltrationDirection::Ascending)
        : direction_(dir) {}

    FiltrationDirection direction() const { return direction_; }

    // Inserts s at value v along with all missing faces. Re-inserting takes
    // the min (Ascending) / max (Descending), so the simplex only moves
    // earlier in the filtration.
    void add_simplex(const Simplex& s, double v);

    // Sorts into canonical order: filtration value (per direction), then
    // dimension, then lexicographic vertex tuple. Throws ValidationError if a
    // face would appear after one of its cofaces.
    void canonicalize();

    bool is_canonical() const { return canonical_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const Cell& cell(std::size_t pos) const { return cells_[pos]; }
    const std::vector<Cell>& cells() const { return cells_; }

    std::optional<std::size_t> position_of(const Simplex& s) const;
    std::optional<double> value_of(const Simplex& s) const;

    // Positions of the codimension-1 faces of the cell at pos, sorted
    // ascending. Requires canonical order.
    std::vector<std::size_t> face_positions(std::size_t pos) const;

    int max_cell_dim() const;
    std::size_t vertex_count() const;

    void set_vertex_label(VertexId v, std::string label);
    const std::string& vertex_label(VertexId v) const;
    const std::vector<std::string>& vertex_labels() const { return labels_; }

    // True iff the cell at a comes strictly before the cell at b in
    // filtration order (value per direction, then dim, then lex).
    bool precedes(const Cell& a, const Cell& b) const;

private:
    FiltrationDirection direction_;
    std::vector<Cell> cells_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
    std::vector<std::string> labels_;
    bool canonical_ = false;
};

}  // namespace persista
