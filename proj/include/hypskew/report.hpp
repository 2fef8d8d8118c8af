#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypskew/chain.hpp"
#include "hypskew/distortion.hpp"

namespace hypskew {

using Json = nlohmann::ordered_json;

inline Json report_to_json(const DistortionReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["supremum"] = r.supremum;
    Json fc = Json::object();
    for (const auto& [k, v] : r.fitted_constants) fc[k] = v;
    j["fitted_constants"] = fc;
    Json samples = Json::array();
    for (const auto& s : r.samples) samples.push_back({s.x, s.y, s.scale, s.value});
    j["samples"] = samples;
    return j;
}

inline Json chain_to_json(const TriangleChain& c) {
    Json j;
    j["side"] = c.triangles.empty() ? 0.0 : c.triangles.front().side();
    j["target"] = {c.target.x(), c.target.y()};
    j["length"] = c.triangles.size();
    Json tris = Json::array();
    for (const auto& t : c.triangles)
        tris.push_back({{t.v1().x(), t.v1().y()}, {t.v2().x(), t.v2().y()}, {t.v3().x(), t.v3().y()}});
    j["triangles"] = tris;
    j["distances"] = c.distances;
    return j;
}

namespace detail {
inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace detail

// Flat sample table: experiment, seed, sample_index, location_x, location_y,
// scale, value.
inline void write_csv(std::ostream& os, std::string_view experiment, const DistortionReport& r) {
    os << "experiment,seed,sample_index,location_x,location_y,scale,value\n";
    for (size_t i = 0; i < r.samples.size(); ++i) {
        const auto& s = r.samples[i];
        os << experiment << ',' << r.seed << ',' << i << ',' << detail::csv_num(s.x) << ','
           << detail::csv_num(s.y) << ',' << detail::csv_num(s.scale) << ','
           << detail::csv_num(s.value) << '\n';
    }
}

}  // namespace hypskew
