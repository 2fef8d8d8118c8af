#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hypskew/metric.hpp"
#include "hypskew/mobius.hpp"
#include "hypskew/point.hpp"
#include "hypskew/triangle.hpp"

namespace hypskew {

// The origin-centered equilateral rotation: t e^{i th} -> t e^{i(th + acos((1+t^2)/2))}.
// Rotates each circle |z| = t by exactly the angle that makes (0, z, image)
// an equilateral hyperbolic triangle. Fixes 0 (by continuity).
inline DiskPoint equilateral_rotation_origin(DiskPoint z) {
    Cx v = z.value();
    double t = std::abs(v);
    if (t == 0.0) return z;
    return DiskPoint(v * std::polar(1.0, vertex_to_angle(t)));
}

inline DiskPoint equilateral_rotation_origin_inverse(DiskPoint z) {
    Cx v = z.value();
    double t = std::abs(v);
    if (t == 0.0) return z;
    return DiskPoint(v * std::polar(1.0, -vertex_to_angle(t)));
}

// Conjugate of the origin rotation by A_w, so that (w, z, apply(z)) is
// equilateral for every z != w.
class EquilateralRotation {
public:
    explicit EquilateralRotation(DiskPoint w = DiskPoint())
        : center_(w), to0_(MobiusMap::point_to_zero(w)), from0_(to0_.inverse()) {}

    DiskPoint center() const { return center_; }

    DiskPoint operator()(DiskPoint z) const {
        DiskPoint u = to0_(z);
        if (std::abs(u.value()) < kBoundaryMargin)
            throw std::domain_error("EquilateralRotation: z coincides with the center");
        return from0_(equilateral_rotation_origin(u));
    }

    DiskPoint inverse(DiskPoint z) const {
        DiskPoint u = to0_(z);
        if (std::abs(u.value()) < kBoundaryMargin)
            throw std::domain_error("EquilateralRotation: z coincides with the center");
        return from0_(equilateral_rotation_origin_inverse(u));
    }

private:
    DiskPoint center_;
    MobiusMap to0_, from0_;
};

// |mu| of the origin rotation, t^2 / sqrt(3 - 2 t^2): 0 at the center,
// -> 1 at the boundary. Independent of arg z.
inline double beltrami_rotation_modulus(DiskPoint z) {
    double t = std::abs(z.value());
    if (t < kBoundaryMargin)
        throw std::domain_error("beltrami_rotation_modulus: undefined at 0");
    return t * t / std::sqrt(3.0 - 2.0 * t * t);
}

// Complex dilatation mu = f_zbar / f_z estimated by central differences of
// the Wirtinger derivatives. The step shrinks to (1-|z|)/4 near the boundary
// so the stencil stays inside the disk.
template <class F>
Cx beltrami_fd_complex(F&& f, DiskPoint z, double h = 1e-5) {
    Cx z0 = z.value();
    double step = std::min(h, (1.0 - std::abs(z0)) / 4.0);
    if (!(step > 0.0))
        throw std::range_error("beltrami_fd: finite-difference step underflowed at the boundary");
    if (std::abs(z0) + step >= 1.0 - kBoundaryMargin)
        throw std::range_error("beltrami_fd: stencil would leave the disk");
    Cx fx = (f(z0 + step) - f(z0 - step)) / (2.0 * step);
    Cx fy = (f(z0 + Cx(0.0, step)) - f(z0 - Cx(0.0, step))) / (2.0 * step);
    Cx fz = 0.5 * (fx - Cx(0.0, 1.0) * fy);
    Cx fzbar = 0.5 * (fx + Cx(0.0, 1.0) * fy);
    if (std::abs(fz) < 1e-14)
        throw NumericError("beltrami_fd: vanishing z-derivative");
    return fzbar / fz;
}

template <class F>
double beltrami_fd(F&& f, DiskPoint z, double h = 1e-5) {
    return std::abs(beltrami_fd_complex(std::forward<F>(f), z, h));
}

}  // namespace hypskew
