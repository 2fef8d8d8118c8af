#pragma once

#include <cmath>
#include <complex>

#include "hypskew/point.hpp"

namespace hypskew {

// Disk automorphism z -> e^{i theta} (z - a) / (1 - conj(a) z).
// Composition and inversion stay in this two-parameter form; internally a
// composition multiplies the su(1,1)-style matrices
//   [alpha, beta; conj(beta), conj(alpha)],  alpha = e^{i theta/2},
//   beta = -e^{i theta/2} a,
// and reads (theta, a) back off the product.
class MobiusMap {
public:
    MobiusMap() = default;  // identity
    MobiusMap(double theta, DiskPoint a) : theta_(theta), a_(a) {}

    static MobiusMap rotation(double theta) { return MobiusMap(theta, DiskPoint()); }
    // A_w: the automorphism (z - w)/(1 - conj(w) z) sending w to 0.
    static MobiusMap point_to_zero(DiskPoint w) { return MobiusMap(0.0, w); }

    double theta() const { return theta_; }
    DiskPoint center() const { return a_; }

    Cx apply_raw(Cx z) const {
        Cx a = a_.value();
        return std::polar(1.0, theta_) * (z - a) / (1.0 - std::conj(a) * z);
    }
    DiskPoint operator()(DiskPoint z) const { return DiskPoint(apply_raw(z)); }

    MobiusMap inverse() const {
        // z = e^{-i theta}(w + e^{i theta} a)/(1 + e^{-i theta} conj(a) w)
        Cx a = a_.value();
        return MobiusMap(-theta_, DiskPoint(-std::polar(1.0, theta_) * a));
    }

    // f * g is the composition f after g.
    friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
        Cx af = std::polar(1.0, f.theta_ / 2.0);
        Cx bf = -af * f.a_.value();
        Cx ag = std::polar(1.0, g.theta_ / 2.0);
        Cx bg = -ag * g.a_.value();
        Cx alpha = af * ag + bf * std::conj(bg);
        Cx beta = af * bg + bf * std::conj(ag);
        return MobiusMap(2.0 * std::arg(alpha), DiskPoint(-beta / alpha));
    }

private:
    double theta_ = 0.0;
    DiskPoint a_;
};

}  // namespace hypskew
