#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypskew/distortion.hpp"
#include "hypskew/halfplane.hpp"
#include "hypskew/maps.hpp"
#include "hypskew/metric.hpp"
#include "hypskew/point.hpp"
#include "hypskew/rng.hpp"
#include "hypskew/triangle.hpp"

namespace hypskew {

// Cyclic covering group of an annulus: generated by one hyperbolic
// translation, held in the half-plane model where it is w -> lambda w.
// Translation length ell = log(lambda); the disk-model generator with axis
// through +-1 is (z + a)/(1 + a z) with a = tanh(ell/2).
class CyclicGroup {
public:
    static CyclicGroup from_halfplane_factor(double lambda) {
        if (!(lambda > 1.0))
            throw std::invalid_argument("CyclicGroup: dilation factor must exceed 1");
        return CyclicGroup(lambda);
    }
    static CyclicGroup from_translation_length(double ell) {
        if (!(ell > 0.0))
            throw std::invalid_argument("CyclicGroup: translation length must be positive");
        return CyclicGroup(std::exp(ell));
    }
    static CyclicGroup from_disk_translation(double a) {
        if (!(a > 0.0 && a < 1.0))
            throw std::invalid_argument("CyclicGroup: disk translation parameter must be in (0,1)");
        return CyclicGroup((1.0 + a) / (1.0 - a));
    }

    double factor() const { return lambda_; }
    double translation_length() const { return std::log(lambda_); }

    Cx apply_halfplane(Cx w, long k) const { return std::pow(lambda_, static_cast<double>(k)) * w; }
    DiskPoint apply(DiskPoint z, long k) const {
        return cayley_to_disk(apply_halfplane(cayley_to_halfplane(z), k));
    }

    friend bool operator==(const CyclicGroup& a, const CyclicGroup& b) {
        return a.lambda_ == b.lambda_;
    }

private:
    explicit CyclicGroup(double lambda) : lambda_(lambda) {}
    double lambda_;
};

// A point of the annulus, held as one chosen lift.
struct QuotientPoint {
    DiskPoint representative;
    CyclicGroup group;
};

struct QuotientDistResult {
    double dist = 0.0;
    long k = 0;                // minimizing orbit index
    std::vector<long> tie_ks;  // other indices within 1e-12 of the minimum
};

// rho_M(p, q) = min_k rho(x, g^k y). The orbit walk stops once
// |k| ell > best + rho(base, x) + rho(base, y), since
// rho(x, g^k y) >= rho(base, g^k base) - rho(base, x) - rho(base, y) and the
// base point i lies on the translation axis, where rho(base, g^k base) = |k| ell.
inline QuotientDistResult quotient_dist_detail(const QuotientPoint& p, const QuotientPoint& q) {
    if (!(p.group == q.group))
        throw std::invalid_argument("quotient_dist: points live on different quotients");
    const Cx base{0.0, 1.0};
    Cx x = cayley_to_halfplane(p.representative);
    Cx y = cayley_to_halfplane(q.representative);
    double ell = p.group.translation_length();
    double reach = dist_halfplane(base, x) + dist_halfplane(base, y);

    QuotientDistResult res;
    res.dist = dist_halfplane(x, y);
    res.k = 0;
    for (long k = 1; static_cast<double>(k) * ell <= res.dist + reach; ++k) {
        for (long s : {k, -k}) {
            double d = dist_halfplane(x, p.group.apply_halfplane(y, s));
            if (d < res.dist - 1e-12) {
                res.dist = d;
                res.k = s;
                res.tie_ks.clear();
            } else if (std::abs(d - res.dist) <= 1e-12 && s != res.k) {
                res.tie_ks.push_back(s);
            }
        }
    }
    return res;
}

inline double quotient_dist(const QuotientPoint& p, const QuotientPoint& q) {
    return quotient_dist_detail(p, q).dist;
}

// The half-plane radial power map w -> w |w|^{K-1} (angle preserved),
// conjugated onto the disk. Satisfies f(lambda w) = lambda^K f(w) exactly, so
// it descends from the lambda-annulus onto the lambda^K-annulus.
inline MapUnderTest halfplane_radial_stretch(double K) {
    if (!(K >= 1.0))
        throw std::invalid_argument("halfplane_radial_stretch: exponent must be >= 1");
    auto conj_power = [](Cx z, double e) {
        Cx w = Cx{0.0, 1.0} * (1.0 + z) / (1.0 - z);
        w *= std::pow(std::abs(w), e);
        return (w - Cx{0.0, 1.0}) / (w + Cx{0.0, 1.0});
    };
    return {"halfplane_stretch(K=" + detail::fmt_num(K) + ")",
            [K, conj_power](Cx z) { return conj_power(z, K - 1.0); },
            [K, conj_power](Cx z) { return conj_power(z, 1.0 / K - 1.0); },
            K};
}

// A lift together with source/target groups, acting on quotient points by
// acting on representatives. Built by descend_map, which certifies
// f(g z) = h f(z) on random samples first.
class DescendedMap {
public:
    DescendedMap(MapUnderTest lift, CyclicGroup src, CyclicGroup dst)
        : lift_(std::move(lift)), src_(src), dst_(dst) {}

    const MapUnderTest& lift() const { return lift_; }
    const CyclicGroup& source() const { return src_; }
    const CyclicGroup& target() const { return dst_; }

    QuotientPoint operator()(const QuotientPoint& p) const {
        if (!(p.group == src_))
            throw std::invalid_argument("DescendedMap: point lives on a different quotient");
        return {lift_.apply_checked(p.representative), dst_};
    }

private:
    MapUnderTest lift_;
    CyclicGroup src_, dst_;
};

inline DescendedMap descend_map(const MapUnderTest& lift, CyclicGroup G, CyclicGroup H,
                                int samples = 1000, uint64_t seed = 0x5eed) {
    Rng rng(seed);
    double worst = 0.0;
    DiskPoint worst_z;
    for (int i = 0; i < samples; ++i) {
        DiskPoint z = rng.point_in_ball(DiskPoint(), 2.5);
        DiskPoint lhs = lift.apply_checked(G.apply(z, 1));
        DiskPoint rhs = H.apply(lift.apply_checked(z), 1);
        double err = dist_disk(lhs, rhs);
        if (err > worst) { worst = err; worst_z = z; }
    }
    if (worst > 1e-9)
        throw NumericError(lift.name + ": equivariance violated by " + std::to_string(worst) +
                           " at (" + std::to_string(worst_z.x()) + ", " +
                           std::to_string(worst_z.y()) + ")");
    return DescendedMap(lift, G, H);
}

// Skew of the image vertex triple measured with quotient distances. The
// triangle's side must stay below ell/2 so it lifts isometrically.
inline double quotient_skew(const DescendedMap& f, const EqTriangle& T) {
    double ell = f.source().translation_length();
    if (!(T.side() < ell / 2.0))
        throw std::invalid_argument("quotient_skew: side " + std::to_string(T.side()) +
                                    " is not below half the translation length");
    QuotientPoint a{T.v1(), f.source()}, b{T.v2(), f.source()}, c{T.v3(), f.source()};
    QuotientPoint fa = f(a), fb = f(b), fc = f(c);
    double d1 = quotient_dist(fa, fb);
    double d2 = quotient_dist(fa, fc);
    double d3 = quotient_dist(fb, fc);
    double lo = std::min({d1, d2, d3});
    if (lo < 1e-14) throw NumericError("quotient_skew: image triangle degenerated");
    return std::max({d1, d2, d3}) / lo;
}

// Quasisymmetry ratios measured with the source/target quotient distances;
// fits the least C against max{t^K, t^{1/K}} with the lift's claimed K.
inline DistortionReport quotient_qs_scan(const DescendedMap& f, int triples, uint64_t seed,
                                         int jobs = 1) {
    if (triples < 1) throw std::invalid_argument("quotient_qs_scan: need at least one triple");
    double K = detail::require_claimed_K(f.lift());
    DistortionReport rep;
    rep.seed = seed;
    rep.samples.resize(static_cast<size_t>(triples));
    parallel_for(triples, jobs, [&](int i) {
        Rng rng(substream(seed, static_cast<uint64_t>(i)));
        DiskPoint c = rng.point_in_ball(DiskPoint(), 1.5);
        QuotientPoint u{rng.point_in_ball(c, 2.0), f.source()};
        QuotientPoint v{rng.point_in_ball(c, 2.0), f.source()};
        QuotientPoint w{rng.point_in_ball(c, 2.0), f.source()};
        double duw = quotient_dist(u, w), duv = quotient_dist(u, v);
        while (duw < 1e-6 || duv < 1e-6) {
            v = {rng.point_in_ball(c, 2.0), f.source()};
            w = {rng.point_in_ball(c, 2.0), f.source()};
            duw = quotient_dist(u, w);
            duv = quotient_dist(u, v);
        }
        double den = quotient_dist(f(u), f(w));
        if (den < 1e-14) throw NumericError("quotient_qs_scan: image pair degenerated");
        rep.samples[static_cast<size_t>(i)] = {u.representative.x(), u.representative.y(),
                                               duv / duw, quotient_dist(f(u), f(v)) / den};
    });
    rep.supremum = report_supremum(rep.samples);
    double C = 0.0;
    size_t worst = 0;
    for (size_t i = 0; i < rep.samples.size(); ++i) {
        double c = rep.samples[i].value / detail::power_shape(rep.samples[i].scale, K);
        if (c > C) { C = c; worst = i; }
    }
    rep.fitted_constants["C"] = C;
    rep.fitted_constants["K"] = K;
    rep.fitted_constants["worst_t"] = rep.samples[worst].scale;
    rep.fitted_constants["worst_ratio"] = rep.samples[worst].value;
    return rep;
}

}  // namespace hypskew
