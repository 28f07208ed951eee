#include "persista/pointcloud.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "persista/threads.hpp"

namespace persista {

VertexId PointCloud::add_point(double c0, double c1, const std::string& label) {
    if (!std::isfinite(c0) || !std::isfinite(c1))
        throw std::invalid_argument("non-finite coordinate");
    if (kind_ == CoordinateKind::Geographic) {
        if (c0 < -90.0 || c0 > 90.0)
            throw std::invalid_argument("latitude out of [-90, 90]: " + std::to_string(c0));
        if (c1 < -180.0 || c1 > 180.0)
            throw std::invalid_argument("longitude out of [-180, 180]: " + std::to_string(c1));
    }
    coords_.push_back({c0, c1});
    labels_.push_back(label);
    return static_cast<VertexId>(coords_.size()) - 1;
}

double euclidean_distance(double x0, double y0, double x1, double y1) {
    return std::hypot(x1 - x0, y1 - y0);
}

double haversine_km(double lat0, double lon0, double lat1, double lon1) {
    constexpr double pi = 3.14159265358979323846;
    constexpr double deg = pi / 180.0;
    const double dlat = (lat1 - lat0) * deg;
    const double dlon = (lon1 - lon0) * deg;
    const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(lat0 * deg) * std::cos(lat1 * deg) *
                         std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

DistanceMatrix pairwise_distances(const PointCloud& pc, Metric m) {
    if (pc.empty()) throw std::invalid_argument("point cloud is empty");
    if (m == Metric::HaversineKm && pc.kind() != CoordinateKind::Geographic)
        throw std::invalid_argument("haversine metric requires lat/lon coordinates");
    if (m == Metric::Euclidean && pc.kind() != CoordinateKind::Planar)
        throw std::invalid_argument("euclidean metric requires planar x/y coordinates");

    const std::size_t n = pc.size();
    DistanceMatrix d(n);
    auto fill_rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double v = m == Metric::Euclidean
                               ? euclidean_distance(pc.coord0(i), pc.coord1(i),
                                                    pc.coord0(j), pc.coord1(j))
                               : haversine_km(pc.coord0(i), pc.coord1(i),
                                              pc.coord0(j), pc.coord1(j));
                d.set(i, j, v);
            }
    };

    const std::size_t workers = std::min<std::size_t>(thread_cap(), n);
    if (workers <= 1 || n < 64) {
        fill_rows(0, n);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t b = w * chunk, e = std::min(n, b + chunk);
            if (b < e) pool.emplace_back(fill_rows, b, e);
        }
        for (auto& t : pool) t.join();
    }
    return d;
}

double enclosing_radius(const DistanceMatrix& d) {
    double radius = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < d.size(); ++i) {
        double farthest = 0.0;
        for (std::size_t j = 0; j < d.size(); ++j) farthest = std::max(farthest, d(i, j));
        radius = std::min(radius, farthest);
    }
    return radius;
}

}  // namespace persista
