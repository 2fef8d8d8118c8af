#pragma once

#include <cmath>
#include <stdexcept>

#include "hypskew/metric.hpp"
#include "hypskew/point.hpp"

namespace hypskew {

// Cayley transform onto the upper half-plane, 0 -> i. Isometry between
// the two models; used where a hyperbolic translation is nicer as w -> lambda w.
inline Cx cayley_to_halfplane(DiskPoint z) {
    Cx v = z.value();
    return Cx{0.0, 1.0} * (1.0 + v) / (1.0 - v);
}

inline DiskPoint cayley_to_disk(Cx w) {
    if (!(w.imag() > 0.0))
        throw std::domain_error("cayley_to_disk: point is not in the upper half-plane");
    return DiskPoint((w - Cx{0.0, 1.0}) / (w + Cx{0.0, 1.0}));
}

// Half-plane hyperbolic distance, 2*atanh(|w1-w2| / |w1 - conj(w2)|).
inline double dist_halfplane(Cx w1, Cx w2) {
    if (!(w1.imag() > 0.0) || !(w2.imag() > 0.0))
        throw std::domain_error("dist_halfplane: points must be in the upper half-plane");
    double p = std::abs(w1 - w2) / std::abs(w1 - std::conj(w2));
    if (p >= 1.0 - kBoundaryMargin)
        throw std::range_error("dist_halfplane: pseudo-distance saturated the boundary");
    return 2.0 * std::atanh(p);
}

}  // namespace hypskew
