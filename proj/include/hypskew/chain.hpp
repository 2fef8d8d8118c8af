#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypskew/metric.hpp"
#include "hypskew/mobius.hpp"
#include "hypskew/point.hpp"
#include "hypskew/triangle.hpp"

namespace hypskew {

// Chain of equal-side equilateral triangles in which consecutive members
// share a full side; `distances[i]` records rho(target, triangles[i]).
struct TriangleChain {
    std::vector<EqTriangle> triangles;
    DiskPoint target;
    std::vector<double> distances;
};

// `count` successive rotations of T about its chosen vertex through the
// interior angle, clockwise. Each member shares a side with its predecessor
// (and the first with T); seven of them wrap past a full turn, since the
// interior angle exceeds 2 pi / 7 for sides <= 1.
inline std::vector<EqTriangle> fan_about_vertex(const EqTriangle& T, int vertex, int count) {
    if (vertex < 0 || vertex > 2)
        throw std::invalid_argument("fan_about_vertex: vertex index must be 0, 1 or 2");
    if (count < 1 || count > 7)
        throw std::invalid_argument("fan_about_vertex: count must be between 1 and 7");
    double alpha = side_to_angle(T.side());
    MobiusMap A = MobiusMap::point_to_zero(T.vertex(vertex));
    MobiusMap rot = A.inverse() * MobiusMap::rotation(-alpha) * A;
    std::vector<EqTriangle> out;
    out.reserve(static_cast<size_t>(count));
    EqTriangle cur = T;
    for (int k = 0; k < count; ++k) {
        cur = EqTriangle(rot(cur.v1()), rot(cur.v2()), rot(cur.v3()));
        out.push_back(cur);
    }
    return out;
}

// m <= max{7, ceil(700 d / r)}: the certified chain-length budget.
inline long chain_length_bound(double dist, double side) {
    return std::max(7l, static_cast<long>(std::ceil(700.0 * dist / side)));
}

// Connects T to p by a chain of side-r equilateral triangles. Each round fans
// up to seven triangles about the vertex of the current triangle nearest to p
// and steps to the fan member closest to p (ties to the lowest index); the
// distance to p must drop by at least r/100 per round, else the geometry is
// broken and we refuse to continue.
inline TriangleChain build_chain(const EqTriangle& T, DiskPoint p) {
    double r = T.side();
    if (!(r <= 1.0))
        throw std::invalid_argument("build_chain: side must be at most 1");

    TriangleChain chain{{T}, p, {dist_to_triangle(p, T)}};
    EqTriangle cur = T;
    double cur_dist = chain.distances.back();
    long max_rounds = static_cast<long>(std::ceil(100.0 * cur_dist / r)) + 10;

    for (long round = 0; cur_dist > 0.0; ++round) {
        if (round > max_rounds)
            throw NumericError("build_chain: no progress after " + std::to_string(round) + " rounds");

        int nearest = 0;
        double best_v = dist_disk(p, cur.vertex(0));
        for (int i = 1; i < 3; ++i) {
            double d = dist_disk(p, cur.vertex(i));
            if (d < best_v) { best_v = d; nearest = i; }
        }

        std::vector<EqTriangle> fan = fan_about_vertex(cur, nearest, 7);
        int pick = 0;
        double pick_dist = dist_to_triangle(p, fan[0]);
        for (int j = 1; j < 7 && pick_dist > 0.0; ++j) {
            double d = dist_to_triangle(p, fan[static_cast<size_t>(j)]);
            if (d < pick_dist) { pick_dist = d; pick = j; }
        }
        if (pick_dist > cur_dist - r / 100.0 + 1e-12)
            throw NumericError("build_chain: fan failed to approach the target (dist " +
                               std::to_string(pick_dist) + " from " + std::to_string(cur_dist) + ")");
        for (int j = 0; j <= pick; ++j) {
            chain.triangles.push_back(fan[static_cast<size_t>(j)]);
            chain.distances.push_back(dist_to_triangle(p, fan[static_cast<size_t>(j)]));
        }
        cur = fan[static_cast<size_t>(pick)];
        cur_dist = pick_dist;
    }
    return chain;
}

struct ChainValidation {
    bool pass = true;
    std::string failure;  // first violated condition, empty when pass
};

// Independent re-check of the chain invariants, in order: equal side lengths
// (1e-9), consecutive full-side sharing (two vertices matched within 1e-10),
// final triangle contains the target.
inline ChainValidation validate_chain(const TriangleChain& c) {
    if (c.triangles.empty()) return {false, "empty chain"};

    double r = c.triangles.front().side();
    for (size_t i = 0; i < c.triangles.size(); ++i) {
        if (std::abs(c.triangles[i].side() - r) > 1e-9)
            return {false, "equal-side violated at triangle " + std::to_string(i)};
    }

    for (size_t i = 0; i + 1 < c.triangles.size(); ++i) {
        const EqTriangle& a = c.triangles[i];
        const EqTriangle& b = c.triangles[i + 1];
        int matched = 0;
        bool used[3] = {false, false, false};
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                if (!used[k] && dist_disk(b.vertex(j), a.vertex(k)) <= 1e-10) {
                    used[k] = true;
                    ++matched;
                    break;
                }
            }
        }
        if (matched < 2)
            return {false, "side-sharing violated between triangles " + std::to_string(i) +
                               " and " + std::to_string(i + 1)};
    }

    if (!contains_point(c.triangles.back(), c.target))
        return {false, "final triangle does not contain the target"};
    return {};
}

}  // namespace hypskew
