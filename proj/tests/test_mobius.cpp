#include <catch_amalgamated.hpp>

#include <cmath>

#include "hypskew/metric.hpp"
#include "hypskew/mobius.hpp"
#include "hypskew/rng.hpp"

using namespace hypskew;

TEST_CASE("point_to_zero sends its center to 0") {
    DiskPoint w(0.3, 0.0);
    CHECK(std::abs(MobiusMap::point_to_zero(w).apply_raw(w)) < 1e-15);
    DiskPoint v(-0.41, 0.27);
    CHECK(std::abs(MobiusMap::point_to_zero(v).apply_raw(v)) < 1e-15);
}

TEST_CASE("the conformal shift (z+r)/(1+rz) moves 0 to r") {
    MobiusMap A(0.0, DiskPoint(-0.5, 0.0));
    CHECK(std::abs(A.apply_raw(Cx{0.0, 0.0}) - Cx{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(A.apply_raw(Cx{-0.5, 0.0})) < 1e-15);
}

TEST_CASE("composition with the inverse is the identity") {
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        MobiusMap M = rng.mobius();
        MobiusMap I = M * M.inverse();
        MobiusMap J = M.inverse() * M;
        for (int i = 0; i < 10; ++i) {
            DiskPoint z = rng.point_in_ball(DiskPoint(), 4.0);
            REQUIRE(std::abs(I.apply_raw(z) - z.value()) < 1e-12);
            REQUIRE(std::abs(J.apply_raw(z) - z.value()) < 1e-12);
            REQUIRE(std::abs(M.inverse().apply_raw(M.apply_raw(z)) - z.value()) < 1e-12);
        }
    }
}

TEST_CASE("composition agrees with pointwise application") {
    Rng rng(102);
    for (int trial = 0; trial < 20; ++trial) {
        MobiusMap F = rng.mobius(), G = rng.mobius();
        MobiusMap FG = F * G;
        for (int i = 0; i < 20; ++i) {
            DiskPoint z = rng.point_in_ball(DiskPoint(), 3.0);
            REQUIRE(std::abs(FG.apply_raw(z) - F.apply_raw(G.apply_raw(z))) < 1e-13);
        }
    }
}

TEST_CASE("Mobius maps are hyperbolic isometries") {
    Rng rng(103);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        MobiusMap M = rng.mobius();
        DiskPoint a = rng.point_in_ball(DiskPoint(), 4.0);
        DiskPoint b = rng.point_in_ball(DiskPoint(), 4.0);
        worst = std::max(worst, std::abs(dist_disk(M(a), M(b)) - dist_disk(a, b)));
    }
    CHECK(worst < 1e-12);
}
