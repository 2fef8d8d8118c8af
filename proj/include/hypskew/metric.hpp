#pragma once

#include <cmath>
#include <stdexcept>

#include "hypskew/point.hpp"

namespace hypskew {

// p = |z-w| / |1 - conj(w) z|, the Mobius-invariant pseudo-distance.
// Exactly symmetric: swapping arguments conjugates the denominator.
inline double pseudo_distance(Cx z, Cx w) {
    return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
}

// Hyperbolic distance on the disk, rho = log((1+p)/(1-p)) evaluated as
// 2*atanh(p) to stay accurate when p is close to 1. Overflows (range_error)
// once p >= 1 - 1e-15, i.e. around rho ~ 71.
inline double dist_disk(DiskPoint z, DiskPoint w) {
    double p = pseudo_distance(z, w);
    if (p >= 1.0 - kBoundaryMargin)
        throw std::range_error("dist_disk: pseudo-distance saturated the boundary");
    return 2.0 * std::atanh(p);
}

// acosh(1+x) for x >= 0 without the cancellation of forming cosh-1 terms.
inline double acosh1p(double x) {
    return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

// Ball-model distance: acosh(1 + 2|u-v|^2 / ((1-|u|^2)(1-|v|^2))).
// Agrees with dist_disk for dimension 2.
inline double dist_ball(const BallPoint& u, const BallPoint& v) {
    if (u.dim() != v.dim())
        throw std::invalid_argument("dist_ball: dimension mismatch");
    double d2 = 0.0;
    for (int i = 0; i < u.dim(); ++i) d2 += (u[i] - v[i]) * (u[i] - v[i]);
    double x = 2.0 * d2 / ((1.0 - u.norm2()) * (1.0 - v.norm2()));
    return acosh1p(x);
}

// Density of the hyperbolic metric, 2/(1-|z|^2).
inline double hyperbolic_density(DiskPoint z) {
    return 2.0 / (1.0 - std::norm(z.value()));
}

// Quasihyperbolic density on the disk, 1/dist(z, boundary) = 1/(1-|z|).
inline double quasihyperbolic_density(DiskPoint z) {
    return 1.0 / (1.0 - std::abs(z.value()));
}

// Sharp constant C such that |z-w| <= rho(z,w) <= C |z-w| on the closed
// hyperbolic ball of radius R about 0 (the lower ratio bound is in fact 2).
// sup rho/|.| equals the density maximum on the ball: the straight chord
// between two points of the Euclidean ball B(0, tanh(R/2)) stays inside it,
// so rho <= lambda_max |z-w|, and nearby points at the rim approach equality.
// lambda_max = 2/(1 - tanh^2(R/2)) = 1 + cosh(R).
inline double euclidean_bilipschitz_constant(double rho_radius) {
    if (!(rho_radius > 0.0))
        throw std::domain_error("euclidean_bilipschitz_constant: radius must be positive");
    return 1.0 + std::cosh(rho_radius);
}

}  // namespace hypskew
