#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "hypskew/halfplane.hpp"
#include "hypskew/metric.hpp"
#include "hypskew/mobius.hpp"
#include "hypskew/rng.hpp"

using namespace hypskew;

namespace {

// Oracle: integrate the density 2/(1-|z|^2) along the geodesic from p to q,
// with the geodesic taken as the straight ray in the frame where p sits at 0.
// Composite Simpson over the Euclidean parameter of that ray.
double dist_by_quadrature(DiskPoint p, DiskPoint q, int panels = 2000) {
    MobiusMap A = MobiusMap::point_to_zero(p);
    Cx u = A.apply_raw(q);
    MobiusMap B = A.inverse();
    auto gamma = [&](double s) { return B.apply_raw(u * s); };
    auto speed = [&](double s) {
        double h = 1e-6;
        Cx dz = (gamma(std::min(1.0, s + h)) - gamma(std::max(0.0, s - h))) /
                (std::min(1.0, s + h) - std::max(0.0, s - h));
        Cx z = gamma(s);
        return 2.0 * std::abs(dz) / (1.0 - std::norm(z));
    };
    double h = 1.0 / panels;
    double acc = speed(0.0) + speed(1.0);
    for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * speed(i * h);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("disk distance closed form") {
    CHECK(dist_disk(DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0)) ==
          Catch::Approx(std::log(3.0)).epsilon(1e-12));
    DiskPoint z(0.37, -0.11);
    CHECK(dist_disk(z, z) == 0.0);
    // against the quadrature oracle, then frozen
    double d = dist_disk(DiskPoint(0.5, 0.0), DiskPoint(0.0, 0.5));
    CHECK(d == Catch::Approx(1.6806997724280036).margin(1e-12));
    CHECK(dist_by_quadrature(DiskPoint(0.5, 0.0), DiskPoint(0.0, 0.5)) ==
          Catch::Approx(d).margin(1e-8));
}

TEST_CASE("boundary points are rejected") {
    CHECK_THROWS_AS(DiskPoint(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(DiskPoint(0.8, 0.61), std::domain_error);
    CHECK_THROWS_AS(BallPoint(0.6, 0.6, 0.6), std::domain_error);
    CHECK_NOTHROW(DiskPoint(0.0, 1.0 - 1e-14));
}

TEST_CASE("ball distance matches the disk and handles dimension 3") {
    CHECK(dist_ball(BallPoint(0.5, 0.0), BallPoint(0.0, 0.5)) ==
          Catch::Approx(1.6806997724280036).margin(1e-12));
    BallPoint u(0.22, -0.4, 0.1);
    CHECK(dist_ball(u, u) == 0.0);
    CHECK(dist_ball(BallPoint(0.0, 0.0, 0.0), BallPoint(0.5, 0.0, 0.0)) ==
          Catch::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(dist_ball(BallPoint(0.1, 0.1), BallPoint(0.1, 0.1, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("disk and ball metrics agree on random pairs") {
    Rng rng(20260810);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        DiskPoint a = rng.point_in_ball(DiskPoint(), 4.0);
        DiskPoint b = rng.point_in_ball(DiskPoint(), 4.0);
        worst = std::max(worst,
                         std::abs(dist_disk(a, b) - dist_ball(BallPoint::from_disk(a),
                                                              BallPoint::from_disk(b))));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("metric axioms sampled") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        DiskPoint a = rng.point_in_ball(DiskPoint(), 3.0);
        DiskPoint b = rng.point_in_ball(DiskPoint(), 3.0);
        DiskPoint c = rng.point_in_ball(DiskPoint(), 3.0);
        REQUIRE(dist_disk(a, b) == dist_disk(b, a));  // exact by construction
        REQUIRE(dist_disk(a, c) <= dist_disk(a, b) + dist_disk(b, c) + 1e-12);
    }
}

TEST_CASE("densities") {
    CHECK(hyperbolic_density(DiskPoint()) == 2.0);
    CHECK(quasihyperbolic_density(DiskPoint()) == 1.0);
    CHECK(hyperbolic_density(DiskPoint(0.5, 0.0)) == Catch::Approx(8.0 / 3.0).epsilon(1e-15));
    CHECK(quasihyperbolic_density(DiskPoint(0.5, 0.0)) == Catch::Approx(2.0).epsilon(1e-15));

    Rng rng(11);
    for (int i = 0; i < 10000; ++i) {
        DiskPoint z = rng.point_in_ball(DiskPoint(), 5.0);
        double ratio = hyperbolic_density(z) / quasihyperbolic_density(z);
        REQUIRE(ratio > 1.0);
        REQUIRE(ratio <= 2.0);
    }
}

TEST_CASE("euclidean bi-Lipschitz constant on a hyperbolic ball") {
    double R = 1.0;
    double C = euclidean_bilipschitz_constant(R);
    CHECK(C == Catch::Approx(1.0 + std::cosh(R)).epsilon(1e-15));

    Rng rng(13);
    double max_ratio = 0.0;
    for (int i = 0; i < 20000; ++i) {
        DiskPoint a = rng.point_in_ball(DiskPoint(), R);
        DiskPoint b = rng.point_in_ball(DiskPoint(), R);
        double e = std::abs(a.value() - b.value());
        if (e < 1e-12) continue;
        double ratio = dist_disk(a, b) / e;
        REQUIRE(ratio >= 2.0 - 1e-12);
        REQUIRE(ratio <= C + 1e-12);
        max_ratio = std::max(max_ratio, ratio);
    }
    // nearby pairs at the rim approach the constant
    double rim = std::tanh(R / 2.0);
    DiskPoint p(rim * std::polar(1.0, 0.0)), q(rim * std::polar(1.0, 1e-7));
    CHECK(dist_disk(p, q) / std::abs(p.value() - q.value()) == Catch::Approx(C).epsilon(1e-6));
}

TEST_CASE("cayley maps are mutually inverse isometries") {
    CHECK(std::abs(cayley_to_halfplane(DiskPoint()) - Cx{0.0, 1.0}) < 1e-15);
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        DiskPoint z = rng.point_in_ball(DiskPoint(), 4.0);
        DiskPoint back = cayley_to_disk(cayley_to_halfplane(z));
        REQUIRE(std::abs(back.value() - z.value()) < 1e-12);
    }
    for (int i = 0; i < 100; ++i) {
        DiskPoint a = rng.point_in_ball(DiskPoint(), 4.0);
        DiskPoint b = rng.point_in_ball(DiskPoint(), 4.0);
        REQUIRE(std::abs(dist_halfplane(cayley_to_halfplane(a), cayley_to_halfplane(b)) -
                         dist_disk(a, b)) < 1e-12);
    }
    CHECK_THROWS_AS(cayley_to_disk(Cx{0.3, -0.1}), std::domain_error);
}

TEST_CASE("distance overflow raises range_error") {
    // pseudo-distance saturates for a pair hugging the boundary on opposite sides
    DiskPoint a(1.0 - 2e-15, 0.0), b(-(1.0 - 2e-15), 0.0);
    CHECK_THROWS_AS(dist_disk(a, b), std::range_error);
}
