#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "hypskew/mobius.hpp"
#include "hypskew/point.hpp"

namespace hypskew {

// Derives an independent substream seed for sample #index. Scans seed one Rng
// per sample this way, so results do not depend on how samples are split
// across workers.
inline uint64_t substream(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Seeded generator. mt19937_64 output is fixed by the standard and the
// mapping to doubles is explicit, so sequences are reproducible everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

    // Uniform w.r.t. hyperbolic area in the ball B_rho(center, radius):
    // area of B_rho(0, s) is 4 pi sinh^2(s/2), so invert that for the radius.
    DiskPoint point_in_ball(DiskPoint center, double radius) {
        double s = 2.0 * std::asinh(std::sinh(radius / 2.0) * std::sqrt(uniform()));
        double th = angle();
        DiskPoint local(std::tanh(s / 2.0) * std::polar(1.0, th));
        return MobiusMap::point_to_zero(center).inverse()(local);
    }

    // Random automorphism; |center| drawn hyperbolic-uniformly below max_center_abs.
    MobiusMap mobius(double max_center_abs = 0.95) {
        DiskPoint a = point_in_ball(DiskPoint(), 2.0 * std::atanh(max_center_abs));
        return MobiusMap(angle(), a);
    }

    // Random automorphism whose center sits at the prescribed modulus.
    MobiusMap mobius_at(double center_abs) {
        DiskPoint a(center_abs * std::polar(1.0, angle()));
        return MobiusMap(angle(), a);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hypskew
