#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypskew/geodesic.hpp"
#include "hypskew/metric.hpp"
#include "hypskew/mobius.hpp"
#include "hypskew/point.hpp"

namespace hypskew {

inline constexpr Cx kOmega{-0.5, 0.8660254037844386467637231707529362};  // e^{2 pi i / 3}

// Interior angle of the equilateral triangle whose vertices are 0, x and
// x e^{i alpha}: alpha = acos((1 + x^2)/2).
inline double vertex_to_angle(double x) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("vertex_to_angle: x must be in (0,1)");
    return std::acos((1.0 + x * x) / 2.0);
}

// Interior angle of the equilateral triangle with hyperbolic side r:
// acos((1 + tanh^2(r/2))/2). Decreasing in r, -> pi/3 as r -> 0.
inline double side_to_angle(double r) {
    if (!(r > 0.0)) throw std::domain_error("side_to_angle: side must be positive");
    double x = std::tanh(r / 2.0);
    return std::acos((1.0 + x * x) / 2.0);
}

// Side length of the canonical triangle with vertices t, t w, t w^2
// (w = e^{2 pi i/3}): r(t) = 2 atanh(t sqrt(3) / sqrt(1 + t^2 + t^4)).
inline double side_from_vertex_param(double t) {
    double t2 = t * t;
    return 2.0 * std::atanh(t * std::sqrt(3.0) / std::sqrt(1.0 + t2 + t2 * t2));
}

// Inverts r(t) by bisection; r(t) is strictly increasing with r -> infinity
// as t -> 1, so a bracket always exists unless r overflows the grid of
// representable t.
inline double canonical_vertex_param(double r) {
    if (!(r > 0.0)) throw std::domain_error("canonical_vertex_param: side must be positive");
    double lo = 0.0, hi = 0.5;
    while (side_from_vertex_param(hi) < r) {
        hi = 1.0 - 0.5 * (1.0 - hi);
        if (1.0 - hi < 1e-14)
            throw NumericError("canonical_vertex_param: side too large to bracket");
    }
    while (hi - lo > 1e-16) {
        double mid = 0.5 * (lo + hi);
        (side_from_vertex_param(mid) < r ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Vertex triple with no shape constraint; skew is the only thing asked of it.
struct Triangle {
    DiskPoint v1, v2, v3;
};

// Ratio of largest to smallest pairwise hyperbolic distance.
inline double skew_hyp(const Triangle& T) {
    double d12 = dist_disk(T.v1, T.v2);
    double d13 = dist_disk(T.v1, T.v3);
    double d23 = dist_disk(T.v2, T.v3);
    double lo = std::min({d12, d13, d23});
    if (lo < 1e-14) throw NumericError("skew_hyp: triangle has a degenerate side");
    return std::max({d12, d13, d23}) / lo;
}

// Same with Euclidean distances.
inline double skew_euclid(const Triangle& T) {
    double d12 = std::abs(T.v1.value() - T.v2.value());
    double d13 = std::abs(T.v1.value() - T.v3.value());
    double d23 = std::abs(T.v2.value() - T.v3.value());
    double lo = std::min({d12, d13, d23});
    if (lo < 1e-14) throw NumericError("skew_euclid: triangle has a degenerate side");
    return std::max({d12, d13, d23}) / lo;
}

// Validated equilateral hyperbolic triangle. The centroid (the image of 0
// under any automorphism taking the triangle to canonical position) is
// computed once at construction: normalize a vertex to the origin, aim at the
// hyperbolic midpoint of the opposite side, and step the vertex-to-centroid
// distance 2 atanh(t) along that diameter.
class EqTriangle {
public:
    EqTriangle(DiskPoint v1, DiskPoint v2, DiskPoint v3) : v_{v1, v2, v3} {
        double d12 = dist_disk(v1, v2);
        double d13 = dist_disk(v1, v3);
        double d23 = dist_disk(v2, v3);
        side_ = (d12 + d13 + d23) / 3.0;
        double dev = std::max({std::abs(d12 - side_), std::abs(d13 - side_), std::abs(d23 - side_)});
        if (dev > 1e-9)
            throw std::invalid_argument("EqTriangle: sides differ by " + std::to_string(dev));
        if (!(side_ > 1e-14))
            throw std::invalid_argument("EqTriangle: degenerate (side ~ 0)");

        MobiusMap A = MobiusMap::point_to_zero(v1);
        Cx m = geodesic_midpoint(A(v2), A(v3)).value();
        double t = canonical_vertex_param(side_);
        centroid_ = A.inverse()(DiskPoint(t * m / std::abs(m)));
    }

    DiskPoint v1() const { return v_[0]; }
    DiskPoint v2() const { return v_[1]; }
    DiskPoint v3() const { return v_[2]; }
    DiskPoint vertex(int i) const { return v_[static_cast<size_t>(i)]; }  // i in {0,1,2}
    double side() const { return side_; }
    DiskPoint centroid() const { return centroid_; }
    Triangle as_triangle() const { return Triangle{v_[0], v_[1], v_[2]}; }

private:
    std::array<DiskPoint, 3> v_;
    double side_;
    DiskPoint centroid_;
};

// Equilateral triangle of hyperbolic side r: canonical vertices t, t w, t w^2
// (centroid 0) transported by `placement`.
inline EqTriangle equilateral_from_side(double r, const MobiusMap& placement = MobiusMap()) {
    double t = canonical_vertex_param(r);
    return EqTriangle(placement(DiskPoint(Cx(t, 0.0))), placement(DiskPoint(t * kOmega)),
                      placement(DiskPoint(t * kOmega * kOmega)));
}

inline DiskPoint centroid(const EqTriangle& T) { return T.centroid(); }

namespace detail {

// Signed side coordinate of p relative to side (a,b): normalize a to the
// origin so the side's geodesic becomes a diameter, then take the transverse
// component. Sign convention matches whatever side the reference interior
// point lands on.
inline double side_coordinate(DiskPoint a, DiskPoint b, DiskPoint p) {
    MobiusMap A = MobiusMap::point_to_zero(a);
    Cx u = A.apply_raw(b);
    u /= std::abs(u);
    return std::imag(std::conj(u) * A.apply_raw(p));
}

template <class F>
double golden_min(F&& f, double a, double b, double xtol) {
    constexpr double invphi = 0.6180339887498948482;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a); f2 = f(x2);
        }
    }
    return std::min(f1, f2);
}

}  // namespace detail

// Closed-triangle membership: p must fall on the centroid's side of all three
// side geodesics, each normalized to a diameter. Offsets within 1e-12 of a
// side count as inside.
inline bool contains_point(const EqTriangle& T, DiskPoint p) {
    DiskPoint c = T.centroid();
    for (int i = 0; i < 3; ++i) {
        DiskPoint a = T.vertex(i), b = T.vertex((i + 1) % 3);
        double sp = detail::side_coordinate(a, b, p);
        double sc = detail::side_coordinate(a, b, c);
        if ((sc >= 0.0 ? sp : -sp) < -1e-12) return false;
    }
    return true;
}

// rho(p, T) for the closed solid triangle: 0 inside, otherwise the smallest
// distance to one of the three geodesic sides (unimodal along each side, so a
// golden-section pass per side suffices).
inline double dist_to_triangle(DiskPoint p, const EqTriangle& T) {
    if (contains_point(T, p)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        DiskPoint a = T.vertex(i), b = T.vertex((i + 1) % 3);
        MobiusMap A = MobiusMap::point_to_zero(a);
        Cx u = A.apply_raw(b);
        double len = std::abs(u);
        Cx e = u / len;
        DiskPoint q(A.apply_raw(p) * std::conj(e));  // side is now [0, len] on the real axis
        auto f = [&](double x) { return dist_disk(q, DiskPoint(Cx(x, 0.0))); };
        double m = detail::golden_min(f, 0.0, len, 1e-12);
        best = std::min({best, m, f(0.0), f(len)});
    }
    return best;
}

// Inscribed-ball radii of the canonical triangle with vertex parameter t:
// Euclidean R(t) = (1 + t^2 - sqrt(1 + t^2 + t^4))/t, evaluated in the
// algebraically equivalent cancellation-free form t/(1 + t^2 + sqrt(...)),
// and the hyperbolic radius 2 atanh(R).
struct InscribedRadii {
    double euclidean;
    double hyperbolic;
};

inline InscribedRadii inscribed_radii(double t) {
    if (!(t > 0.0 && t < 1.0))
        throw std::domain_error("inscribed_radii: t must be in (0,1)");
    double t2 = t * t;
    double R = t / (1.0 + t2 + std::sqrt(1.0 + t2 + t2 * t2));
    return InscribedRadii{R, 2.0 * std::atanh(R)};
}

// Largest delta such that B_rho(centroid, 2 delta r) fits inside every
// equilateral triangle of side r <= 1: minimizes hyp_inradius(r)/(2r) over
// (0, 1]. The minimum sits at r = 1 (the ratio decreases from 1/(4 sqrt 3)
// at r -> 0); a grid plus golden refinement pins it without assuming that.
inline double inscribed_ball_factor() {
    static const double value = [] {
        auto g = [](double r) {
            return inscribed_radii(canonical_vertex_param(r)).hyperbolic / (2.0 * r);
        };
        int n = 1000;
        double best = std::numeric_limits<double>::infinity();
        int arg = 1;
        for (int k = 1; k <= n; ++k) {
            double v = g(static_cast<double>(k) / n);
            if (v < best) { best = v; arg = k; }
        }
        double lo = std::max(1, arg - 1) / static_cast<double>(n);
        double hi = std::min(n, arg + 1) / static_cast<double>(n);
        return std::min(best, detail::golden_min(g, lo, hi, 1e-9));
    }();
    return value;
}

}  // namespace hypskew
