#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypskew/mobius.hpp"
#include "hypskew/point.hpp"
#include "hypskew/rotation.hpp"

namespace hypskew {

// A self-map of the disk under study: point evaluation plus metadata. The
// scans validate on the fly that sampled images stay inside the disk.
struct MapUnderTest {
    std::string name;
    std::function<Cx(Cx)> eval;
    std::function<Cx(Cx)> inverse;  // empty when no closed form is wired up
    std::optional<double> claimed_K;

    Cx operator()(Cx z) const { return eval(z); }

    DiskPoint apply_checked(DiskPoint z) const {
        Cx w = eval(z.value());
        if (!(std::abs(w) < 1.0 - kBoundaryMargin))
            throw NumericError(name + ": image of (" + std::to_string(z.x()) + ", " +
                               std::to_string(z.y()) + ") left the unit disk");
        return DiskPoint(w);
    }
};

enum class MapKind { mobius, radial_stretch, boundary_twist, rot0, composite };

inline MapKind map_kind_from_string(const std::string& s) {
    if (s == "mobius") return MapKind::mobius;
    if (s == "radial_stretch") return MapKind::radial_stretch;
    if (s == "boundary_twist") return MapKind::boundary_twist;
    if (s == "rot0") return MapKind::rot0;
    if (s == "composite") return MapKind::composite;
    throw std::invalid_argument("unknown map kind '" + s + "'");
}

inline std::string map_kind_to_string(MapKind k) {
    switch (k) {
        case MapKind::mobius: return "mobius";
        case MapKind::radial_stretch: return "radial_stretch";
        case MapKind::boundary_twist: return "boundary_twist";
        case MapKind::rot0: return "rot0";
        case MapKind::composite: return "composite";
    }
    return "?";
}

// Declarative map description, as it appears in experiment configs.
//   mobius:          params [r] for (z+r)/(1+rz), or [theta, ax, ay]
//   radial_stretch:  params [K], K >= 1, z -> z |z|^{K-1}
//   boundary_twist:  params [c] (default 0.2), r e^{i th} -> r e^{i(th + c/(1-r))}
//   rot0:            no params, the origin-centered equilateral rotation
//   composite:       components applied first-to-last
struct MapSpec {
    MapKind kind = MapKind::mobius;
    std::vector<double> params;
    std::optional<double> claimed_K;
    std::vector<MapSpec> components;
};

namespace detail {
inline std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}
}  // namespace detail

inline MapUnderTest identity_map() {
    return {"identity", [](Cx z) { return z; }, [](Cx z) { return z; }, 1.0};
}

inline MapUnderTest from_mobius(const MobiusMap& M, std::string name = "mobius") {
    MobiusMap Minv = M.inverse();
    return {std::move(name), [M](Cx z) { return M.apply_raw(z); },
            [Minv](Cx z) { return Minv.apply_raw(z); }, 1.0};
}

inline MapUnderTest make_radial_stretch(double K) {
    if (!(K >= 1.0))
        throw std::invalid_argument("radial_stretch: exponent must be >= 1");
    auto power = [](Cx z, double e) {
        double a = std::abs(z);
        return a == 0.0 ? Cx{0.0, 0.0} : z * std::pow(a, e);
    };
    return {"radial_stretch(K=" + detail::fmt_num(K) + ")",
            [K, power](Cx z) { return power(z, K - 1.0); },
            [K, power](Cx z) { return power(z, 1.0 / K - 1.0); },
            K};
}

inline MapUnderTest make_boundary_twist(double c) {
    return {"boundary_twist(c=" + detail::fmt_num(c) + ")",
            [c](Cx z) { return z * std::polar(1.0, c / (1.0 - std::abs(z))); },
            [c](Cx z) { return z * std::polar(1.0, -c / (1.0 - std::abs(z))); },
            std::nullopt};
}

inline MapUnderTest compose_maps(std::vector<MapUnderTest> maps) {
    if (maps.empty()) throw std::invalid_argument("compose_maps: empty list");
    if (maps.size() == 1) return maps.front();

    std::string name = maps.front().name;
    std::optional<double> K = maps.front().claimed_K;
    bool invertible = static_cast<bool>(maps.front().inverse);
    for (size_t i = 1; i < maps.size(); ++i) {
        name += " * " + maps[i].name;
        if (K && maps[i].claimed_K)
            K = *K * *maps[i].claimed_K;
        else
            K = std::nullopt;
        invertible = invertible && static_cast<bool>(maps[i].inverse);
    }

    auto shared = std::make_shared<std::vector<MapUnderTest>>(std::move(maps));
    std::function<Cx(Cx)> fwd = [shared](Cx z) {
        for (const auto& m : *shared) z = m.eval(z);
        return z;
    };
    std::function<Cx(Cx)> inv;
    if (invertible)
        inv = [shared](Cx z) {
            for (auto it = shared->rbegin(); it != shared->rend(); ++it) z = it->inverse(z);
            return z;
        };
    return {std::move(name), std::move(fwd), std::move(inv), K};
}

inline MapUnderTest make_map(const MapSpec& spec) {
    MapUnderTest m;
    switch (spec.kind) {
        case MapKind::mobius: {
            MobiusMap M;
            std::string label;
            if (spec.params.size() == 1) {
                double r = spec.params[0];
                if (!(std::abs(r) < 1.0))
                    throw std::invalid_argument("mobius: |r| must be < 1");
                M = MobiusMap(0.0, DiskPoint(-r, 0.0));  // (z + r)/(1 + r z)
                label = "mobius(r=" + detail::fmt_num(r) + ")";
            } else if (spec.params.size() == 3) {
                M = MobiusMap(spec.params[0], DiskPoint(spec.params[1], spec.params[2]));
                label = "mobius(theta=" + detail::fmt_num(spec.params[0]) + ",a=" +
                        detail::fmt_num(spec.params[1]) + "+" + detail::fmt_num(spec.params[2]) + "i)";
            } else {
                throw std::invalid_argument("mobius: expected params [r] or [theta, ax, ay]");
            }
            m = from_mobius(M, label);
            break;
        }
        case MapKind::radial_stretch:
            if (spec.params.size() != 1)
                throw std::invalid_argument("radial_stretch: expected params [K]");
            m = make_radial_stretch(spec.params[0]);
            break;
        case MapKind::boundary_twist: {
            if (spec.params.size() > 1)
                throw std::invalid_argument("boundary_twist: expected params [] or [c]");
            m = make_boundary_twist(spec.params.empty() ? 0.2 : spec.params[0]);
            break;
        }
        case MapKind::rot0:
            if (!spec.params.empty())
                throw std::invalid_argument("rot0: takes no params");
            m = {"rot0",
                 [](Cx z) { return std::abs(z) == 0.0
                                ? z
                                : z * std::polar(1.0, vertex_to_angle(std::abs(z))); },
                 [](Cx z) { return std::abs(z) == 0.0
                                ? z
                                : z * std::polar(1.0, -vertex_to_angle(std::abs(z))); },
                 std::nullopt};
            break;
        case MapKind::composite: {
            if (spec.components.empty())
                throw std::invalid_argument("composite: needs at least one component");
            std::vector<MapUnderTest> parts;
            parts.reserve(spec.components.size());
            for (const auto& c : spec.components) parts.push_back(make_map(c));
            m = compose_maps(std::move(parts));
            break;
        }
    }
    if (spec.claimed_K) {
        if (!(*spec.claimed_K >= 1.0))
            throw std::invalid_argument("claimed_K must be >= 1");
        m.claimed_K = spec.claimed_K;
    }
    return m;
}

}  // namespace hypskew
