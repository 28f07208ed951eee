#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace persista {

// Dense index into a complex's label table.
using VertexId = int;

// A simplex is a strictly increasing vertex tuple; dimension = size - 1.
struct Simplex {
    std::vector<VertexId> vertices;

    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vs);
    explicit Simplex(std::vector<VertexId> vs);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    std::size_t size() const { return vertices.size(); }
    VertexId operator[](std::size_t i) const { return vertices[i]; }

    bool operator==(const Simplex& o) const { return vertices == o.vertices; }
    bool operator<(const Simplex& o) const { return vertices < o.vertices; }

    std::string to_string() const;
};

// Codimension-1 faces, each omitting one vertex, in lexicographic order.
// A vertex has no faces.
std::vector<Simplex> faces(const Simplex& s);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (VertexId v : s.vertices) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace persista
