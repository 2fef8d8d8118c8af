#pragma once

#include <cmath>
#include <stdexcept>

#include "hypskew/metric.hpp"
#include "hypskew/mobius.hpp"
#include "hypskew/point.hpp"

namespace hypskew {

// Geodesic segment from p to q, parametrized by hyperbolic arclength
// fraction: rho(point_at(s), p) = s * rho(p, q). Evaluation normalizes p to
// the origin, where geodesics are diameters, walks the straight ray and maps
// back. s outside [0,1] extends the geodesic line past the endpoints.
class GeodesicSegment {
public:
    GeodesicSegment(DiskPoint p, DiskPoint q)
        : p_(p), to_origin_(MobiusMap::point_to_zero(p)), from_origin_(to_origin_.inverse()) {
        Cx u = to_origin_.apply_raw(q);
        len_ = 2.0 * std::atanh(std::abs(u));
        degenerate_ = std::abs(u) < kBoundaryMargin;
        dir_ = degenerate_ ? Cx{1.0, 0.0} : u / std::abs(u);
    }

    double length() const { return len_; }
    bool degenerate() const { return degenerate_; }

    DiskPoint point_at(double s) const {
        if (degenerate_) return p_;
        return from_origin_(DiskPoint(std::tanh(s * len_ / 2.0) * dir_));
    }

private:
    DiskPoint p_;
    MobiusMap to_origin_, from_origin_;
    Cx dir_;
    double len_;
    bool degenerate_;
};

// Hyperbolic midpoint; for a degenerate pair returns p itself (callers that
// care can test the pair first).
inline DiskPoint geodesic_midpoint(DiskPoint p, DiskPoint q) {
    return GeodesicSegment(p, q).point_at(0.5);
}

// Interior angle at w1 of the hyperbolic triangle (w1, w2, w3), via the
// hyperbolic law of cosines
//   cos phi = (cosh a cosh b - cosh c) / (sinh a sinh b),
// a = rho(w1,w2), b = rho(w1,w3), c = rho(w2,w3).
inline double angle_at_vertex(DiskPoint w1, DiskPoint w2, DiskPoint w3) {
    double a = dist_disk(w1, w2);
    double b = dist_disk(w1, w3);
    if (a < 1e-14 || b < 1e-14)
        throw std::domain_error("angle_at_vertex: a ray from the vertex has degenerated");
    double c = dist_disk(w2, w3);
    double cosphi = (std::cosh(a) * std::cosh(b) - std::cosh(c)) / (std::sinh(a) * std::sinh(b));
    if (cosphi > 1.0) cosphi = 1.0;
    if (cosphi < -1.0) cosphi = -1.0;
    return std::acos(cosphi);
}

}  // namespace hypskew
