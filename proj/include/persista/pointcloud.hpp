#pragma once

#include <array>
#include <string>
#include <vector>

#include "persista/simplex.hpp"

namespace persista {

enum class CoordinateKind { Planar, Geographic };

enum class Metric { Euclidean, HaversineKm };

inline constexpr double kEarthRadiusKm = 6371.0;

// Labeled points with either planar x/y or geographic lat/lon coordinates
// (degrees, lat first).
class PointCloud {
public:
    explicit PointCloud(CoordinateKind kind = CoordinateKind::Planar) : kind_(kind) {}

    VertexId add_point(double c0, double c1, const std::string& label = "");

    CoordinateKind kind() const { return kind_; }
    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }
    double coord0(VertexId v) const { return coords_[v][0]; }
    double coord1(VertexId v) const { return coords_[v][1]; }
    const std::string& label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    CoordinateKind kind_;
    std::vector<std::array<double, 2>> coords_;
    std::vector<std::string> labels_;
};

// Symmetric matrix in a flat row-major buffer.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}
    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }

private:
    std::size_t n_;
    std::vector<double> d_;
};

double euclidean_distance(double x0, double y0, double x1, double y1);
double haversine_km(double lat0, double lon0, double lat1, double lon1);

// Throws std::invalid_argument when the metric does not fit the coordinate
// kind (haversine on planar data or vice versa).
DistanceMatrix pairwise_distances(const PointCloud& pc, Metric m);

// min over points of its farthest distance to any other point; beyond this
// the complex is a cone and homology above dimension 0 is trivial.
double enclosing_radius(const DistanceMatrix& d);

}  // namespace persista
