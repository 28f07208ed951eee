#include "persista/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace persista {

namespace {

void validate(const std::vector<VertexId>& vs) {
    if (vs.empty()) throw std::invalid_argument("simplex must have at least one vertex");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0) throw std::invalid_argument("negative vertex id");
        if (i > 0 && vs[i] <= vs[i - 1])
            throw std::invalid_argument("simplex vertices must be strictly increasing");
    }
}

}  // namespace

Simplex::Simplex(std::initializer_list<VertexId> vs) : vertices(vs) {
    std::sort(vertices.begin(), vertices.end());
    validate(vertices);
}

Simplex::Simplex(std::vector<VertexId> vs) : vertices(std::move(vs)) {
    validate(vertices);
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ',';
        os << vertices[i];
    }
    os << '}';
    return os.str();
}

std::vector<Simplex> faces(const Simplex& s) {
    std::vector<Simplex> out;
    if (s.dim() < 1) return out;
    out.reserve(s.size());
    // Omitting the smallest vertex first yields lexicographic order of the faces.
    for (std::size_t omit = 0; omit < s.size(); ++omit) {
        std::vector<VertexId> f;
        f.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != omit) f.push_back(s.vertices[i]);
        out.emplace_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace persista
