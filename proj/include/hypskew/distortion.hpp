#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypskew/geodesic.hpp"
#include "hypskew/maps.hpp"
#include "hypskew/metric.hpp"
#include "hypskew/parallel.hpp"
#include "hypskew/rng.hpp"
#include "hypskew/triangle.hpp"

namespace hypskew {

// One scan observation: where it was taken, at which scale, and the value.
struct ScanSample {
    double x = 0.0, y = 0.0;
    double scale = 0.0;
    double value = 0.0;
};

// Scan outcome: all samples, their maximum, any fitted constants, and the
// seed that reproduces the run bit-for-bit.
struct DistortionReport {
    std::vector<ScanSample> samples;
    double supremum = 0.0;
    std::map<std::string, double> fitted_constants;
    uint64_t seed = 0;
};

inline double report_supremum(const std::vector<ScanSample>& samples) {
    double s = -std::numeric_limits<double>::infinity();
    for (const auto& v : samples) s = std::max(s, v.value);
    return s;
}

// The point at hyperbolic distance r from x in direction theta:
// A_x^{-1}(tanh(r/2) e^{i theta}).
inline DiskPoint hyperbolic_circle_point(DiskPoint x, double r, double theta) {
    if (!(r > 0.0)) throw std::domain_error("hyperbolic_circle_point: radius must be positive");
    if (r > 35.0)
        throw std::range_error("hyperbolic_circle_point: radius saturates the boundary");
    DiskPoint local(std::tanh(r / 2.0) * std::polar(1.0, theta));
    return MobiusMap::point_to_zero(x).inverse()(local);
}

namespace detail {

template <class F>
double golden_max(F&& f, double a, double b, int steps) {
    constexpr double invphi = 0.6180339887498948482;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < steps; ++i) {
        if (f1 > f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a); f2 = f(x2);
        }
    }
    return std::max(f1, f2);
}

struct CircleExtremes {
    double max_dist;
    double min_dist;
};

// max/min of rho(f(x), f(y)) over the hyperbolic circle rho(x, y) = r:
// discrete angular sweep plus one golden-section pass around each discrete
// extremum (the refinement window is the pair of neighboring grid angles).
inline CircleExtremes circle_extremes(const MapUnderTest& f, DiskPoint x, double r, int samples,
                                      int refine_steps = 30) {
    if (samples < 8)
        throw std::invalid_argument("circle_extremes: need at least 8 samples");
    DiskPoint fx = f.apply_checked(x);
    auto val = [&](double theta) {
        return dist_disk(fx, f.apply_checked(hyperbolic_circle_point(x, r, theta)));
    };
    double step = 2.0 * std::numbers::pi / samples;
    int imax = 0, imin = 0;
    std::vector<double> v(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        v[static_cast<size_t>(i)] = val(i * step);
        if (v[static_cast<size_t>(i)] > v[static_cast<size_t>(imax)]) imax = i;
        if (v[static_cast<size_t>(i)] < v[static_cast<size_t>(imin)]) imin = i;
    }
    double hi = golden_max(val, (imax - 1) * step, (imax + 1) * step, refine_steps);
    double lo = -golden_max([&](double t) { return -val(t); }, (imin - 1) * step,
                            (imin + 1) * step, refine_steps);
    hi = std::max(hi, v[static_cast<size_t>(imax)]);
    lo = std::min(lo, v[static_cast<size_t>(imin)]);
    return {hi, lo};
}

inline double require_claimed_K(const MapUnderTest& f) {
    if (!f.claimed_K)
        throw std::invalid_argument(f.name + ": scan requires a claimed dilatation K");
    return *f.claimed_K;
}

inline double power_shape(double t, double K) {
    return std::max(std::pow(t, K), std::pow(t, 1.0 / K));
}

}  // namespace detail

// Hyperbolic linear distortion H_rho(x, r) = L_rho / ell_rho of f over the
// circle of hyperbolic radius r about x.
inline double h_rho(const MapUnderTest& f, DiskPoint x, double r, int samples = 256) {
    auto [hi, lo] = detail::circle_extremes(f, x, r, samples);
    if (lo < 1e-14)
        throw NumericError("h_rho: image circle degenerated (min distance ~ 0)");
    return hi / lo;
}

// Random placements for triangle scans; center_abs < 0 draws centers
// hyperbolic-uniformly with |center| <= 0.95, otherwise centers sit at the
// prescribed modulus (used to probe behavior toward the boundary).
inline std::vector<MobiusMap> random_placements(int count, uint64_t seed, double center_abs = -1.0) {
    Rng rng(seed);
    std::vector<MobiusMap> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(center_abs < 0.0 ? rng.mobius() : rng.mobius_at(center_abs));
    return out;
}

// Hyperbolic skew of image triangles over every (side, placement) pair; the
// supremum is the empirical skew-distortion bound of f.
inline DistortionReport skew_scan(const MapUnderTest& f, const std::vector<double>& r_grid,
                                  std::span<const MobiusMap> placements, uint64_t seed,
                                  int jobs = 1) {
    for (double r : r_grid)
        if (!(r > 0.0)) throw std::invalid_argument("skew_scan: sides must be positive");
    int n = static_cast<int>(r_grid.size() * placements.size());
    DistortionReport rep;
    rep.seed = seed;
    rep.samples.resize(static_cast<size_t>(n));
    parallel_for(n, jobs, [&](int i) {
        double r = r_grid[static_cast<size_t>(i) / placements.size()];
        const MobiusMap& P = placements[static_cast<size_t>(i) % placements.size()];
        EqTriangle T = equilateral_from_side(r, P);
        Triangle image{f.apply_checked(T.v1()), f.apply_checked(T.v2()), f.apply_checked(T.v3())};
        DiskPoint c = P(DiskPoint());
        rep.samples[static_cast<size_t>(i)] = {c.x(), c.y(), r, skew_hyp(image)};
    });
    rep.supremum = report_supremum(rep.samples);
    rep.fitted_constants["sigma"] = rep.supremum;
    return rep;
}

inline DistortionReport skew_scan(const MapUnderTest& f, const std::vector<double>& r_grid,
                                  int placements, uint64_t seed, int jobs = 1) {
    std::vector<MobiusMap> P = random_placements(placements, substream(seed, 0));
    return skew_scan(f, r_grid, P, seed, jobs);
}

// Quasisymmetry ratio scan: samples triples (u, v, w) with u, w in hyperbolic
// balls of radius 3 about a common random center and v on the geodesic line
// through u and w (fraction s in [-1.2, 2.2], so t = rho(u,v)/rho(u,w) covers
// both sides of 1), then fits the least C with
//   rho(fu,fv)/rho(fu,fw) <= C max{t^K, t^{1/K}}
// for the claimed K.
inline DistortionReport qs_ratio_scan(const MapUnderTest& f, int triples, uint64_t seed,
                                      int jobs = 1) {
    if (triples < 1) throw std::invalid_argument("qs_ratio_scan: need at least one triple");
    double K = detail::require_claimed_K(f);
    DistortionReport rep;
    rep.seed = seed;
    rep.samples.resize(static_cast<size_t>(triples));
    parallel_for(triples, jobs, [&](int i) {
        Rng rng(substream(seed, static_cast<uint64_t>(i)));
        DiskPoint c = rng.point_in_ball(DiskPoint(), 2.0);
        DiskPoint u = rng.point_in_ball(c, 3.0);
        DiskPoint w = rng.point_in_ball(c, 3.0);
        while (dist_disk(u, w) < 1e-6) w = rng.point_in_ball(c, 3.0);
        double s = 0.0;
        do { s = rng.uniform(-1.2, 2.2); } while (std::abs(s) < 0.02);
        DiskPoint v = GeodesicSegment(u, w).point_at(s);
        double t = dist_disk(u, v) / dist_disk(u, w);
        DiskPoint fu = f.apply_checked(u), fv = f.apply_checked(v), fw = f.apply_checked(w);
        double den = dist_disk(fu, fw);
        if (den < 1e-14) throw NumericError("qs_ratio_scan: image pair degenerated");
        rep.samples[static_cast<size_t>(i)] = {u.x(), u.y(), t, dist_disk(fu, fv) / den};
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
    rep.fitted_constants["worst_x"] = rep.samples[worst].x;
    rep.fitted_constants["worst_y"] = rep.samples[worst].y;
    return rep;
}

// Empirical constants for the growth bounds
//   rho(fx,fy) <= C1 max{rho(x,y)^{1/K}, rho(x,y)},
//   rho(fx,fy) >= C2 min{rho(x,y)^K,     rho(x,y)}:
// least C1 and greatest C2 over sampled pairs, with the extremal pairs.
inline DistortionReport growth_bounds_fit(const MapUnderTest& f, int pairs, uint64_t seed,
                                          int jobs = 1) {
    if (pairs < 1) throw std::invalid_argument("growth_bounds_fit: need at least one pair");
    double K = detail::require_claimed_K(f);
    DistortionReport rep;
    rep.seed = seed;
    rep.samples.resize(static_cast<size_t>(pairs));
    std::vector<double> lower(static_cast<size_t>(pairs));
    parallel_for(pairs, jobs, [&](int i) {
        Rng rng(substream(seed, static_cast<uint64_t>(i)));
        DiskPoint x = rng.point_in_ball(DiskPoint(), 3.0);
        double d = rng.uniform(0.02, 6.0);
        DiskPoint y = hyperbolic_circle_point(x, d, rng.angle());
        double image = dist_disk(f.apply_checked(x), f.apply_checked(y));
        rep.samples[static_cast<size_t>(i)] = {x.x(), x.y(), d,
                                               image / std::max(std::pow(d, 1.0 / K), d)};
        lower[static_cast<size_t>(i)] = image / std::min(std::pow(d, K), d);
    });
    rep.supremum = report_supremum(rep.samples);
    size_t hi = 0, lo = 0;
    for (size_t i = 0; i < rep.samples.size(); ++i) {
        if (rep.samples[i].value > rep.samples[hi].value) hi = i;
        if (lower[i] < lower[lo]) lo = i;
    }
    rep.fitted_constants["C1"] = rep.samples[hi].value;
    rep.fitted_constants["C1_scale"] = rep.samples[hi].scale;
    rep.fitted_constants["C2"] = lower[lo];
    rep.fitted_constants["C2_scale"] = rep.samples[lo].scale;
    rep.fitted_constants["K"] = K;
    return rep;
}

// For f fixing 0: sup over the side grid of L_rho(0, t r) / ell_rho(0, r),
// the empirical value of a quasisymmetry bound at argument t.
inline DistortionReport ratio_bound_scan(const MapUnderTest& f, double t,
                                         const std::vector<double>& r_grid,
                                         int circle_samples = 256) {
    if (!(t > 0.0)) throw std::invalid_argument("ratio_bound_scan: t must be positive");
    Cx f0 = f.eval(Cx{0.0, 0.0});
    if (std::abs(f0) > 1e-12)
        throw NumericError("ratio_bound_scan: map does not fix 0 (|f(0)| = " +
                           std::to_string(std::abs(f0)) + ")");
    DistortionReport rep;
    rep.seed = 0;
    DiskPoint origin;
    for (double r : r_grid) {
        if (!(r > 0.0)) throw std::invalid_argument("ratio_bound_scan: radii must be positive");
        double L = detail::circle_extremes(f, origin, t * r, circle_samples).max_dist;
        double ell = detail::circle_extremes(f, origin, r, circle_samples).min_dist;
        if (ell < 1e-14) throw NumericError("ratio_bound_scan: inner circle degenerated");
        rep.samples.push_back({0.0, 0.0, r, L / ell});
    }
    rep.supremum = report_supremum(rep.samples);
    rep.fitted_constants["eta"] = rep.supremum;
    rep.fitted_constants["t"] = t;
    return rep;
}

}  // namespace hypskew
