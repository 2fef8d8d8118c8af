#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "hypskew/maps.hpp"
#include "hypskew/metric.hpp"
#include "hypskew/rng.hpp"
#include "hypskew/rotation.hpp"
#include "hypskew/triangle.hpp"

using namespace hypskew;

TEST_CASE("origin rotation advances the argument by the equilateral angle") {
    DiskPoint z(0.5, 0.0);
    DiskPoint w = equilateral_rotation_origin(z);
    // acos(0.625), oracle-frozen
    CHECK(std::arg(w.value()) == Catch::Approx(0.8956647938578650).margin(1e-12));
    CHECK(std::abs(w.value()) == 0.5);  // modulus preserved exactly
    CHECK(skew_hyp(Triangle{DiskPoint(), z, w}) == Catch::Approx(1.0).margin(1e-10));

    CHECK(std::abs(equilateral_rotation_origin(DiskPoint()).value()) == 0.0);  // fixed point

    Rng rng(401);
    for (int i = 0; i < 200; ++i) {
        DiskPoint p = rng.point_in_ball(DiskPoint(), 4.0);
        REQUIRE(std::abs(equilateral_rotation_origin(p).value()) == std::abs(p.value()));
        DiskPoint back = equilateral_rotation_origin_inverse(equilateral_rotation_origin(p));
        REQUIRE(std::abs(back.value() - p.value()) < 1e-15);
    }
}

TEST_CASE("conjugated rotation generates equilateral triangles about its center") {
    Rng rng(402);
    EquilateralRotation R0;  // center 0 reduces to the origin rotation
    for (int i = 0; i < 50; ++i) {
        DiskPoint z = rng.point_in_ball(DiskPoint(), 3.0);
        if (std::abs(z.value()) < 1e-12) continue;
        REQUIRE(std::abs(R0(z).value() - equilateral_rotation_origin(z).value()) < 1e-14);
    }

    double worst = 0.0, worst_rad = 0.0, worst_inv = 0.0;
    for (int i = 0; i < 1000; ++i) {
        DiskPoint w = rng.point_in_ball(DiskPoint(), 3.0);
        DiskPoint z = rng.point_in_ball(DiskPoint(), 3.0);
        if (dist_disk(w, z) < 1e-6) continue;
        EquilateralRotation Rw(w);
        DiskPoint img = Rw(z);
        worst = std::max(worst, std::abs(skew_hyp(Triangle{w, z, img}) - 1.0));
        worst_rad = std::max(worst_rad, std::abs(dist_disk(w, img) - dist_disk(w, z)));
        worst_inv = std::max(worst_inv, std::abs(Rw.inverse(img).value() - z.value()));
    }
    CHECK(worst < 1e-9);
    CHECK(worst_rad < 1e-10);
    CHECK(worst_inv < 1e-12);

    EquilateralRotation Rw(DiskPoint(0.3, 0.1));
    CHECK_THROWS_AS(Rw(DiskPoint(0.3, 0.1)), std::domain_error);
}

TEST_CASE("exact dilatation modulus of the origin rotation") {
    CHECK(beltrami_rotation_modulus(DiskPoint(0.5, 0.0)) ==
          Catch::Approx(0.25 / std::sqrt(2.5)).margin(1e-15));
    CHECK(beltrami_rotation_modulus(DiskPoint(0.01, 0.0)) < 1e-3);  // conformal at the center
    // oracle-frozen from t^2/sqrt(3-2t^2) at t = 0.99
    CHECK(beltrami_rotation_modulus(DiskPoint(0.0, 0.99)) ==
          Catch::Approx(0.9611595438752394).margin(1e-12));
    // independent of the argument
    CHECK(beltrami_rotation_modulus(DiskPoint(0.5 * std::polar(1.0, 2.1))) ==
          Catch::Approx(beltrami_rotation_modulus(DiskPoint(0.5, 0.0))).margin(1e-15));
    CHECK_THROWS_AS(beltrami_rotation_modulus(DiskPoint()), std::domain_error);
}

TEST_CASE("finite-difference dilatation matches closed forms") {
    auto rot0 = [](Cx z) {
        return std::abs(z) == 0.0 ? z : z * std::polar(1.0, vertex_to_angle(std::abs(z)));
    };

    // grid check against the exact modulus
    double worst = 0.0;
    for (int it = 1; it <= 20; ++it) {
        double t = 0.045 * it;  // up to 0.9
        for (int ia = 0; ia < 8; ++ia) {
            DiskPoint z(t * std::polar(1.0, ia * std::numbers::pi / 4.0));
            worst = std::max(worst, std::abs(beltrami_fd(rot0, z) - beltrami_rotation_modulus(z)));
        }
    }
    CHECK(worst < 1e-6);

    // Mobius maps are conformal
    Rng rng(403);
    MobiusMap M = rng.mobius();
    CHECK(beltrami_fd([&](Cx z) { return M.apply_raw(z); }, DiskPoint(0.2, -0.4)) < 1e-8);

    // the radial power map has constant |mu| = (K-1)/(K+1)
    MapUnderTest stretch = make_radial_stretch(2.0);
    for (Cx z : {Cx{0.3, 0.0}, Cx{-0.1, 0.55}, Cx{0.0, -0.72}}) {
        CHECK(beltrami_fd(stretch.eval, DiskPoint(z)) == Catch::Approx(1.0 / 3.0).margin(1e-6));
    }
}

TEST_CASE("rotation angle window on circles of side-scale radius") {
    // on |z| = tanh(r/2) the rotation angle is the interior angle at side r
    for (int k = 1; k <= 200; ++k) {
        double r = k / 200.0;
        double angle = vertex_to_angle(std::tanh(r / 2.0));
        REQUIRE(angle > 2.0 * std::numbers::pi / 7.0);
        REQUIRE(angle < std::numbers::pi / 3.0);
    }
}

TEST_CASE("finite-difference step adapts near the boundary") {
    auto rot0 = [](Cx z) {
        return std::abs(z) == 0.0 ? z : z * std::polar(1.0, vertex_to_angle(std::abs(z)));
    };
    DiskPoint close(0.999999, 0.0);
    CHECK_NOTHROW(beltrami_fd(rot0, close, 1e-3));  // step shrinks, stencil stays inside
}
