#include "persista/complex.hpp"

#include <algorithm>

namespace persista {

void FilteredComplex::add_simplex(const Simplex& s, double v) {
    canonical_ = false;
    auto it = index_.find(s);
    if (it != index_.end()) {
        double& cur = cells_[it->second].value;
        if (direction_ == FiltrationDirection::Ascending)
            cur = std::min(cur, v);
        else
            cur = std::max(cur, v);
    } else {
        index_.emplace(s, cells_.size());
        cells_.push_back({s, v});
    }
    for (const Simplex& f : faces(s)) add_simplex(f, v);
}

bool FilteredComplex::precedes(const Cell& a, const Cell& b) const {
    if (a.value != b.value)
        return direction_ == FiltrationDirection::Ascending ? a.value < b.value
                                                            : a.value > b.value;
    if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
    return a.simplex < b.simplex;
}

void FilteredComplex::canonicalize() {
    std::sort(cells_.begin(), cells_.end(),
              [this](const Cell& a, const Cell& b) { return precedes(a, b); });
    index_.clear();
    for (std::size_t i = 0; i < cells_.size(); ++i) index_.emplace(cells_[i].simplex, i);
    // Monotonicity: every face must sit at an earlier or equal filtration value.
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        for (const Simplex& f : faces(cells_[i].simplex)) {
            auto it = index_.find(f);
            if (it == index_.end())
                throw ValidationError("closure violated: face " + f.to_string() +
                                      " of " + cells_[i].simplex.to_string() + " missing");
            const Cell& fc = cells_[it->second];
            bool ok = direction_ == FiltrationDirection::Ascending
                          ? fc.value <= cells_[i].value
                          : fc.value >= cells_[i].value;
            if (!ok)
                throw ValidationError("monotonicity violated: face " + f.to_string() +
                                      " enters after coface " + cells_[i].simplex.to_string());
        }
    }
    canonical_ = true;
}

std::optional<std::size_t> FilteredComplex::position_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<double> FilteredComplex::value_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return cells_[it->second].value;
}

std::vector<std::size_t> FilteredComplex::face_positions(std::size_t pos) const {
    std::vector<std::size_t> out;
    for (const Simplex& f : faces(cells_[pos].simplex)) {
        auto it = index_.find(f);
        if (it == index_.end())
            throw ValidationError("closure violated: face " + f.to_string() + " missing");
        out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int FilteredComplex::max_cell_dim() const {
    int d = -1;
    for (const Cell& c : cells_) d = std::max(d, c.simplex.dim());
    return d;
}

std::size_t FilteredComplex::vertex_count() const {
    std::size_t n = 0;
    for (const Cell& c : cells_)
        if (c.simplex.dim() == 0) ++n;
    return n;
}

void FilteredComplex::set_vertex_label(VertexId v, std::string label) {
    if (static_cast<std::size_t>(v) >= labels_.size()) labels_.resize(v + 1);
    labels_[v] = std::move(label);
}

const std::string& FilteredComplex::vertex_label(VertexId v) const {
    static const std::string empty;
    if (v < 0 || static_cast<std::size_t>(v) >= labels_.size()) return empty;
    return labels_[v];
}

}  // namespace persista
