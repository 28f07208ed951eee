#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "persista/persistence.hpp"
#include "persista/vr.hpp"
#include "persista/wrcf.hpp"

using namespace persista;
using persista::testing::random_cloud;

TEST_CASE("pairwise distances: basics") {
    PointCloud pc(CoordinateKind::Planar);
    pc.add_point(0, 0);
    pc.add_point(0, 0);
    pc.add_point(3, 4);
    auto d = pairwise_distances(pc, Metric::Euclidean);
    CHECK(d(0, 1) == 0.0);
    CHECK(d(0, 2) == doctest::Approx(5.0));
    CHECK(d(2, 0) == d(0, 2));
    CHECK(d(1, 1) == 0.0);
}

TEST_CASE("haversine: antipodal points are pi times the earth radius apart") {
    PointCloud pc(CoordinateKind::Geographic);
    pc.add_point(0, 0);
    pc.add_point(0, 180);
    auto d = pairwise_distances(pc, Metric::HaversineKm);
    CHECK(d(0, 1) == doctest::Approx(3.14159265358979323846 * 6371.0).epsilon(1e-12));
}

TEST_CASE("metric/coordinate mismatch is an error") {
    PointCloud planar(CoordinateKind::Planar);
    planar.add_point(1, 2);
    CHECK_THROWS(pairwise_distances(planar, Metric::HaversineKm));
    PointCloud geo(CoordinateKind::Geographic);
    geo.add_point(51.5, -0.1);
    CHECK_THROWS(pairwise_distances(geo, Metric::Euclidean));
}

TEST_CASE("geographic coordinate ranges are enforced") {
    PointCloud geo(CoordinateKind::Geographic);
    CHECK_THROWS(geo.add_point(200, 0));
    CHECK_THROWS(geo.add_point(0, 190));
}

TEST_CASE("unit square: one loop born 1 dying at sqrt(2)") {
    PointCloud pc(CoordinateKind::Planar);
    pc.add_point(0, 0);
    pc.add_point(1, 0);
    pc.add_point(1, 1);
    pc.add_point(0, 1);
    auto K = build_vr(pc, Metric::Euclidean, 2.0, 1);
    auto b = barcode(K, 1);
    REQUIRE(b.dim(1).size() == 1);
    CHECK(b.dim(1)[0].birth == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(b.dim(1)[0].death == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(betti_at(b, 1.2, 1) == 1);
}

TEST_CASE("single point: one infinite dim-0 bar and nothing else") {
    PointCloud pc(CoordinateKind::Planar);
    pc.add_point(0.5, 0.5);
    auto K = build_vr(pc, Metric::Euclidean, 1.0, 1);
    auto b = barcode(K, 1);
    REQUIRE(b.dim(0).size() == 1);
    CHECK(!b.dim(0)[0].finite());
    CHECK(b.dim(0)[0].birth == 0.0);
    CHECK(b.dim(1).empty());
}

TEST_CASE("two distant points: one bar dies at their distance, one is infinite") {
    PointCloud pc(CoordinateKind::Planar);
    pc.add_point(0, 0);
    pc.add_point(7, 0);
    auto b = barcode(build_vr(pc, Metric::Euclidean, 10.0, 1), 1);
    REQUIRE(b.dim(0).size() == 2);
    CHECK(b.dim(0)[0].death == doctest::Approx(7.0));
    CHECK(!b.dim(0)[1].finite());
}

TEST_CASE("diameter rule: every simplex value is the max of its edge values") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        PointCloud pc = random_cloud(rng, 7);
        auto K = build_vr(pc, Metric::Euclidean, 3.0, 2);
        for (const auto& c : K.cells()) {
            if (c.simplex.dim() < 2) continue;
            double m = 0.0;
            for (const Simplex& f : faces(c.simplex)) m = std::max(m, *K.value_of(f));
            CHECK(c.value == m);
        }
    }
}

TEST_CASE("monotonicity: enlarging eps_max only extends the filtration") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        PointCloud pc = random_cloud(rng, 7);
        auto Ksmall = build_vr(pc, Metric::Euclidean, 0.8, 1);
        auto Kbig = build_vr(pc, Metric::Euclidean, 1.6, 1);
        for (const auto& c : Ksmall.cells()) {
            auto v = Kbig.value_of(c.simplex);
            REQUIRE(v.has_value());
            CHECK(*v == c.value);
        }
        // bars of the smaller scale are bars of the larger, truncated at 0.8
        auto bs = barcode(Ksmall, 1), bb = barcode(Kbig, 1);
        for (int d2 = 0; d2 <= 1; ++d2)
            for (double t : {0.1, 0.3, 0.5, 0.7})
                CHECK(betti_at(bs, t, d2) == betti_at(bb, t, d2));
    }
}

TEST_CASE("isometry invariance: rigid motions preserve the barcode") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> ad(0.0, 6.28), td(-5.0, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        PointCloud pc = random_cloud(rng, 7);
        double a = ad(rng), tx = td(rng), ty = td(rng);
        PointCloud moved(CoordinateKind::Planar);
        for (std::size_t i = 0; i < pc.size(); ++i) {
            double x = pc.coord0(i), y = pc.coord1(i);
            moved.add_point(std::cos(a) * x - std::sin(a) * y + tx,
                            std::sin(a) * x + std::cos(a) * y + ty);
        }
        auto b1 = barcode(build_vr(pc, Metric::Euclidean, 2.0, 1), 1);
        auto b2 = barcode(build_vr(moved, Metric::Euclidean, 2.0, 1), 1);
        for (int d2 = 0; d2 <= 1; ++d2) {
            REQUIRE(b1.dim(d2).size() == b2.dim(d2).size());
            for (std::size_t i = 0; i < b1.dim(d2).size(); ++i) {
                CHECK(b1.dim(d2)[i].birth ==
                      doctest::Approx(b2.dim(d2)[i].birth).epsilon(1e-9));
                if (b1.dim(d2)[i].finite())
                    CHECK(b1.dim(d2)[i].death ==
                          doctest::Approx(b2.dim(d2)[i].death).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("VR at fixed eps equals the clique complex of the eps-neighborhood graph") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        PointCloud pc = random_cloud(rng, 8);
        auto d = pairwise_distances(pc, Metric::Euclidean);
        double eps = 0.9;
        auto K = build_vr(pc, Metric::Euclidean, 3.0, 2);
        // neighborhood graph as a weighted graph fed through the WRCF machinery
        WeightedGraph g;
        for (std::size_t i = 0; i < pc.size(); ++i) g.add_node("p" + std::to_string(i));
        for (std::size_t i = 0; i < pc.size(); ++i)
            for (std::size_t j = i + 1; j < pc.size(); ++j)
                if (d(i, j) <= eps) g.add_edge(i, j, d(i, j));
        auto Kg = build_wrcf(g, WeightOrder::Ascending, 2);
        // same simplex set at scale eps
        std::size_t in_K = 0;
        for (const auto& c : K.cells())
            if (c.value <= eps) ++in_K;
        CHECK(in_K == Kg.size());
        for (const auto& c : Kg.cells()) {
            auto v = K.value_of(c.simplex);
            REQUIRE(v.has_value());
            CHECK(*v <= eps);
        }
    }
}

TEST_CASE("epsilon schedules snap values up; unreachable simplices are excluded") {
    PointCloud pc(CoordinateKind::Planar);
    pc.add_point(0, 0);
    pc.add_point(1, 0);
    pc.add_point(1, 1);
    pc.add_point(0, 1);
    auto sched = EpsilonSchedule::explicit_steps({1.1});
    auto K = build_vr(pc, Metric::Euclidean, 2.0, 1, sched);
    CHECK(*K.value_of(Simplex{0, 1}) == 1.1);              // snapped up from 1.0
    CHECK(!K.value_of(Simplex{0, 2}).has_value());         // sqrt(2) beyond the grid
    CHECK_THROWS(EpsilonSchedule::explicit_steps({2.0, 1.0}));
    CHECK_THROWS(EpsilonSchedule::explicit_steps({-1.0}));

    auto grid = EpsilonSchedule::uniform_grid(4);
    auto Kg = build_vr(pc, Metric::Euclidean, 2.0, 1, grid);
    CHECK(*Kg.value_of(Simplex{0, 1}) == 1.0);   // grid point 2*2/4
    CHECK(*Kg.value_of(Simplex{0, 2}) == 1.5);   // sqrt(2) snaps to 1.5
}

TEST_CASE("enclosing radius of the unit square is its diagonal") {
    PointCloud pc(CoordinateKind::Planar);
    pc.add_point(0, 0);
    pc.add_point(1, 0);
    pc.add_point(1, 1);
    pc.add_point(0, 1);
    auto d = pairwise_distances(pc, Metric::Euclidean);
    CHECK(enclosing_radius(d) == doctest::Approx(std::sqrt(2.0)));
}
