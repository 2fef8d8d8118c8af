#pragma once

#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypskew/chain.hpp"
#include "hypskew/distortion.hpp"
#include "hypskew/maps.hpp"
#include "hypskew/quotient.hpp"
#include "hypskew/report.hpp"
#include "hypskew/rotation.hpp"
#include "hypskew/svg.hpp"

namespace hypskew {

// Config or schema problem; the CLI reports these as exit code 2 (everything
// thrown after validation is a numeric failure, exit code 3).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct ChainConfig {
    double side = 0.5;
    DiskPoint target{0.6, 0.4};
};

struct QuotientConfig {
    double lambda = 3.0;
    double K = 2.0;
    int triangles = 200;
    int triples = 2000;
};

struct ExperimentConfig {
    std::string experiment;
    uint64_t seed = 1;
    std::string out = ".";
    bool render = false;
    int jobs = 1;
    std::optional<MapSpec> map;
    std::vector<double> r_grid;
    int placements = 64;
    double center_abs = -1.0;
    int locations = 16;
    int circle_samples = 256;
    int triples = 10000;
    int pairs = 10000;
    ChainConfig chain;
    QuotientConfig quotient;
};

namespace detail {

inline void reject_unknown(const nlohmann::json& j, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("unknown field '" + it.key() + "' in " + where);
}

inline MapSpec parse_map_spec(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("map must be an object");
    reject_unknown(j, {"kind", "params", "claimed_K", "components"}, "map");
    if (!j.contains("kind")) throw ConfigError("map.kind is required");
    MapSpec spec;
    spec.kind = map_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("params")) spec.params = j.at("params").get<std::vector<double>>();
    if (j.contains("claimed_K")) spec.claimed_K = j.at("claimed_K").get<double>();
    if (j.contains("components"))
        for (const auto& c : j.at("components")) spec.components.push_back(parse_map_spec(c));
    return spec;
}

}  // namespace detail

inline ExperimentConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    detail::reject_unknown(j,
                           {"experiment", "seed", "out", "render", "jobs", "map", "r_grid",
                            "placements", "center_abs", "locations", "circle_samples", "triples",
                            "pairs", "chain", "quotient"},
                           "config");
    ExperimentConfig c;
    if (!j.contains("experiment")) throw ConfigError("'experiment' is required");
    c.experiment = j.at("experiment").get<std::string>();
    static const std::set<std::string> kinds{"verify-lemmas", "skew-scan", "hrho-scan",
                                             "qs-scan",       "growth-fit", "chain-demo",
                                             "quotient-demo"};
    if (!kinds.count(c.experiment))
        throw ConfigError("unknown experiment '" + c.experiment + "'");

    try {
        if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
        if (j.contains("render")) c.render = j.at("render").get<bool>();
        if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
        if (j.contains("map")) c.map = detail::parse_map_spec(j.at("map"));
        if (j.contains("r_grid")) c.r_grid = j.at("r_grid").get<std::vector<double>>();
        if (j.contains("placements")) c.placements = j.at("placements").get<int>();
        if (j.contains("center_abs")) c.center_abs = j.at("center_abs").get<double>();
        if (j.contains("locations")) c.locations = j.at("locations").get<int>();
        if (j.contains("circle_samples")) c.circle_samples = j.at("circle_samples").get<int>();
        if (j.contains("triples")) c.triples = j.at("triples").get<int>();
        if (j.contains("pairs")) c.pairs = j.at("pairs").get<int>();
        if (j.contains("chain")) {
            const auto& ch = j.at("chain");
            detail::reject_unknown(ch, {"side", "target"}, "chain");
            if (ch.contains("side")) c.chain.side = ch.at("side").get<double>();
            if (ch.contains("target")) {
                auto t = ch.at("target").get<std::vector<double>>();
                if (t.size() != 2) throw ConfigError("chain.target must be [x, y]");
                c.chain.target = DiskPoint(t[0], t[1]);
            }
        }
        if (j.contains("quotient")) {
            const auto& q = j.at("quotient");
            detail::reject_unknown(q, {"lambda", "K", "triangles", "triples"}, "quotient");
            if (q.contains("lambda")) c.quotient.lambda = q.at("lambda").get<double>();
            if (q.contains("K")) c.quotient.K = q.at("K").get<double>();
            if (q.contains("triangles")) c.quotient.triangles = q.at("triangles").get<int>();
            if (q.contains("triples")) c.quotient.triples = q.at("triples").get<int>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config type error: ") + e.what());
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("config value error: ") + e.what());
    }

    if (c.r_grid.empty()) c.r_grid = {0.25, 0.5, 1.0};
    for (double r : c.r_grid)
        if (!(r > 0.0)) throw ConfigError("r_grid entries must be positive");
    if (c.placements < 1 || c.locations < 1 || c.triples < 1 || c.pairs < 1 || c.jobs < 1)
        throw ConfigError("counts must be positive");
    if (c.circle_samples < 8) throw ConfigError("circle_samples must be at least 8");

    const bool needs_map = c.experiment == "skew-scan" || c.experiment == "hrho-scan" ||
                           c.experiment == "qs-scan" || c.experiment == "growth-fit";
    if (needs_map && !c.map) throw ConfigError(c.experiment + " requires a map");
    if (c.map) {
        try {
            (void)make_map(*c.map);  // surface parameter problems at validation time
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("map: ") + e.what());
        }
    }
    return c;
}

namespace detail {

struct LemmaResult {
    std::string name;
    bool pass;
    std::string detail;
};

inline std::vector<LemmaResult> run_lemma_suite(uint64_t seed) {
    std::vector<LemmaResult> out;
    auto check = [&](const std::string& name, bool pass, const std::string& detail) {
        out.push_back({name, pass, detail});
    };
    char buf[160];

    {  // side/vertex angle forms agree and the canonical triple is equilateral
        double worst_side = 0.0, worst_angle = 0.0;
        for (int k = 1; k <= 200; ++k) {
            double r = k / 200.0;
            double x = std::tanh(r / 2.0);
            double alpha = vertex_to_angle(x);
            DiskPoint a(0.0, 0.0), b(x, 0.0), cpt(x * std::polar(1.0, alpha));
            worst_side = std::max({worst_side, std::abs(dist_disk(a, b) - r),
                                   std::abs(dist_disk(a, cpt) - r), std::abs(dist_disk(b, cpt) - r)});
            worst_angle = std::max(worst_angle, std::abs(alpha - side_to_angle(r)));
        }
        std::snprintf(buf, sizeof buf, "max side dev %.2e, max angle dev %.2e", worst_side,
                      worst_angle);
        check("equilateral_triple_construction", worst_side < 1e-10 && worst_angle < 1e-12, buf);
    }
    {  // interior angles for sides <= 1 stay strictly inside (2 pi/7, pi/3)
        bool ok = true;
        double lo = 2.0 * std::numbers::pi / 7.0, hi = std::numbers::pi / 3.0;
        for (int k = 1; k <= 1000; ++k) {
            double a = side_to_angle(k / 1000.0);
            ok = ok && a > lo && a < hi;
        }
        std::snprintf(buf, sizeof buf, "angle(1) = %.6f in (%.6f, %.6f)", side_to_angle(1.0), lo, hi);
        check("angle_window_sides_leq_1", ok, buf);
    }
    {  // inscribed-radius limits and the centroid-ball containment
        double R1 = inscribed_radii(1.0 - 1e-9).euclidean;
        double R0 = inscribed_radii(1e-6).euclidean / 1e-6;
        double delta = inscribed_ball_factor();
        bool anchors = std::abs(R1 - (2.0 - std::sqrt(3.0))) < 1e-6 && std::abs(R0 - 0.5) < 1e-4 &&
                       delta >= 0.13;
        Rng rng(substream(seed, 101));
        bool contained = true;
        for (int i = 0; i < 20 && contained; ++i) {
            double r = rng.uniform(0.05, 1.0);
            EqTriangle T = equilateral_from_side(r, rng.mobius(0.7));
            for (int s = 0; s < 200 && contained; ++s) {
                DiskPoint b = hyperbolic_circle_point(T.centroid(), 2.0 * delta * r, rng.angle());
                contained = contains_point(T, b);
            }
        }
        std::snprintf(buf, sizeof buf, "R(1)=%.6f, R/t->%.6f, delta=%.6f, containment %s", R1, R0,
                      delta, contained ? "ok" : "violated");
        check("inscribed_ball_factor", anchors && contained, buf);
    }
    {  // chains reach random targets within the certified budget
        Rng rng(substream(seed, 102));
        bool ok = true;
        long worst_len = 0;
        for (int i = 0; i < 20 && ok; ++i) {
            double r = rng.uniform(0.1, 1.0);
            EqTriangle T = equilateral_from_side(r, rng.mobius(0.5));
            DiskPoint p = rng.point_in_ball(DiskPoint(), 3.0);
            TriangleChain c = build_chain(T, p);
            ok = validate_chain(c).pass &&
                 static_cast<long>(c.triangles.size()) <=
                     chain_length_bound(dist_to_triangle(p, T), r);
            worst_len = std::max(worst_len, static_cast<long>(c.triangles.size()));
        }
        std::snprintf(buf, sizeof buf, "20 chains, longest %ld triangles", worst_len);
        check("chain_reaches_target_within_budget", ok, buf);
    }
    {  // dilatation of the equilateral rotation: finite differences vs closed form
        double worst = 0.0;
        for (int it = 1; it <= 10; ++it) {
            double t = 0.09 * it;
            for (int ia = 0; ia < 4; ++ia) {
                DiskPoint z(t * std::polar(1.0, ia * 1.1));
                double fd = beltrami_fd(
                    [](Cx w) {
                        return std::abs(w) == 0.0
                                   ? w
                                   : w * std::polar(1.0, vertex_to_angle(std::abs(w)));
                    },
                    z);
                worst = std::max(worst, std::abs(fd - beltrami_rotation_modulus(z)));
            }
        }
        std::snprintf(buf, sizeof buf, "max |fd - exact| = %.2e", worst);
        check("rotation_dilatation_modulus", worst < 1e-6, buf);
    }
    {  // conjugated rotations generate equilateral triangles everywhere
        Rng rng(substream(seed, 103));
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            DiskPoint w = rng.point_in_ball(DiskPoint(), 2.5);
            DiskPoint z = rng.point_in_ball(DiskPoint(), 2.5);
            if (dist_disk(w, z) < 1e-6) continue;
            EquilateralRotation Rw(w);
            worst = std::max(worst, std::abs(skew_hyp(Triangle{w, z, Rw(z)}) - 1.0));
        }
        std::snprintf(buf, sizeof buf, "max |skew - 1| = %.2e over 100 pairs", worst);
        check("rotation_generates_equilateral", worst < 1e-9, buf);
    }
    {  // conformal self-maps distort Euclidean ratios but not hyperbolic ones
        bool ok = true;
        double worst_h = 0.0;
        for (double r : {0.5, 0.9, 0.99}) {
            MobiusMap A(0.0, DiskPoint(-r, 0.0));  // (z + r)/(1 + r z)
            DiskPoint u(0.0, 0.0), v(-r, 0.0), w(r, 0.0);
            double eu = std::abs(A.apply_raw(u) - A.apply_raw(v)) /
                        std::abs(A.apply_raw(u) - A.apply_raw(w));
            ok = ok && std::abs(eu - (1.0 + r * r) / (1.0 - r * r)) < 1e-12;
            worst_h = std::max(worst_h,
                               std::abs(dist_disk(A(u), A(v)) / dist_disk(A(u), A(w)) - 1.0));
        }
        std::snprintf(buf, sizeof buf, "euclidean ratio matches (1+r^2)/(1-r^2); hyp dev %.2e",
                      worst_h);
        check("conformal_contrast", ok && worst_h < 1e-12, buf);
    }
    {  // isometries look exactly conformal to every scan
        Rng rng(substream(seed, 104));
        MapUnderTest iso = from_mobius(rng.mobius(0.8));
        double sigma = skew_scan(iso, {0.3, 1.0}, 16, substream(seed, 105)).supremum;
        double H = h_rho(iso, rng.point_in_ball(DiskPoint(), 1.5), 0.7, 64);
        double C = qs_ratio_scan(iso, 500, substream(seed, 106)).fitted_constants.at("C");
        auto g = growth_bounds_fit(iso, 500, substream(seed, 107)).fitted_constants;
        bool ok = std::abs(sigma - 1.0) < 1e-9 && std::abs(H - 1.0) < 1e-9 &&
                  std::abs(C - 1.0) < 1e-9 && std::abs(g.at("C1") - 1.0) < 1e-9 &&
                  std::abs(g.at("C2") - 1.0) < 1e-9;
        std::snprintf(buf, sizeof buf, "sigma=%.12f H=%.12f C=%.12f C1=%.12f C2=%.12f", sigma, H, C,
                      g.at("C1"), g.at("C2"));
        check("isometry_controls", ok, buf);
    }
    return out;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw NumericError("cannot open " + path.string() + " for writing");
    os << content;
}

}  // namespace detail

// Runs one experiment and writes report.json / report.csv (and figures/ when
// rendering) under cfg.out. Returns true when the run itself carries a
// pass/fail meaning (verify-lemmas) and everything passed.
inline bool run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
    namespace fs = std::filesystem;
    fs::path out(cfg.out);
    fs::create_directories(out);

    Json envelope;
    envelope["experiment"] = cfg.experiment;
    envelope["seed"] = cfg.seed;
    bool all_pass = true;
    std::string csv;

    auto finish_scan = [&](const DistortionReport& rep) {
        envelope["report"] = report_to_json(rep);
        std::ostringstream os;
        write_csv(os, cfg.experiment, rep);
        csv = os.str();
    };

    if (cfg.experiment == "verify-lemmas") {
        auto results = detail::run_lemma_suite(cfg.seed);
        Json lemmas = Json::array();
        DistortionReport flat;
        flat.seed = cfg.seed;
        for (size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            log << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
            all_pass = all_pass && r.pass;
            lemmas.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            flat.samples.push_back({0.0, 0.0, 0.0, r.pass ? 1.0 : 0.0});
        }
        flat.supremum = report_supremum(flat.samples);
        envelope["lemmas"] = lemmas;
        std::ostringstream os;
        write_csv(os, cfg.experiment, flat);
        csv = os.str();
    } else if (cfg.experiment == "skew-scan") {
        MapUnderTest f = make_map(*cfg.map);
        std::vector<MobiusMap> placements =
            random_placements(cfg.placements, substream(cfg.seed, 0), cfg.center_abs);
        DistortionReport rep = skew_scan(f, cfg.r_grid, placements, cfg.seed, cfg.jobs);
        log << "skew-scan " << f.name << ": supremum " << rep.supremum << "\n";
        finish_scan(rep);
        if (cfg.render) {
            size_t worst = 0;
            for (size_t i = 0; i < rep.samples.size(); ++i)
                if (rep.samples[i].value > rep.samples[worst].value) worst = i;
            double r = rep.samples[worst].scale;
            const MobiusMap& P = placements[worst % placements.size()];
            EqTriangle T = equilateral_from_side(r, P);
            SvgScene scene;
            scene.add_eq_triangle(T, "#1f77b4");
            scene.add_triangle(
                Triangle{f.apply_checked(T.v1()), f.apply_checked(T.v2()), f.apply_checked(T.v3())},
                "#d62728");
            fs::create_directories(out / "figures");
            detail::write_text_file(out / "figures" / "worst_triangle.svg", scene.render());
        }
    } else if (cfg.experiment == "hrho-scan") {
        MapUnderTest f = make_map(*cfg.map);
        Rng rng(substream(cfg.seed, 0));
        std::vector<DiskPoint> xs;
        for (int i = 0; i < cfg.locations; ++i) xs.push_back(rng.point_in_ball(DiskPoint(), 2.5));
        DistortionReport rep;
        rep.seed = cfg.seed;
        int n = static_cast<int>(xs.size() * cfg.r_grid.size());
        rep.samples.resize(static_cast<size_t>(n));
        parallel_for(n, cfg.jobs, [&](int i) {
            DiskPoint x = xs[static_cast<size_t>(i) / cfg.r_grid.size()];
            double r = cfg.r_grid[static_cast<size_t>(i) % cfg.r_grid.size()];
            rep.samples[static_cast<size_t>(i)] = {x.x(), x.y(), r,
                                                   h_rho(f, x, r, cfg.circle_samples)};
        });
        rep.supremum = report_supremum(rep.samples);
        rep.fitted_constants["H"] = rep.supremum;
        log << "hrho-scan " << f.name << ": supremum " << rep.supremum << "\n";
        finish_scan(rep);
    } else if (cfg.experiment == "qs-scan") {
        MapUnderTest f = make_map(*cfg.map);
        DistortionReport rep = qs_ratio_scan(f, cfg.triples, cfg.seed, cfg.jobs);
        log << "qs-scan " << f.name << ": fitted C " << rep.fitted_constants.at("C") << "\n";
        finish_scan(rep);
    } else if (cfg.experiment == "growth-fit") {
        MapUnderTest f = make_map(*cfg.map);
        DistortionReport rep = growth_bounds_fit(f, cfg.pairs, cfg.seed, cfg.jobs);
        log << "growth-fit " << f.name << ": C1 " << rep.fitted_constants.at("C1") << ", C2 "
            << rep.fitted_constants.at("C2") << "\n";
        finish_scan(rep);
    } else if (cfg.experiment == "chain-demo") {
        Rng rng(substream(cfg.seed, 0));
        EqTriangle T = equilateral_from_side(cfg.chain.side, rng.mobius(0.3));
        TriangleChain c = build_chain(T, cfg.chain.target);
        ChainValidation v = validate_chain(c);
        if (!v.pass) throw NumericError("chain-demo produced an invalid chain: " + v.failure);
        envelope["chain"] = chain_to_json(c);
        envelope["chain"]["bound"] =
            chain_length_bound(dist_to_triangle(cfg.chain.target, T), cfg.chain.side);
        log << "chain-demo: " << c.triangles.size() << " triangles\n";
        DistortionReport flat;
        flat.seed = cfg.seed;
        for (size_t i = 0; i < c.triangles.size(); ++i) {
            DiskPoint ci = c.triangles[i].centroid();
            flat.samples.push_back({ci.x(), ci.y(), cfg.chain.side, c.distances[i]});
        }
        flat.supremum = report_supremum(flat.samples);
        std::ostringstream os;
        write_csv(os, cfg.experiment, flat);
        csv = os.str();
        if (cfg.render) {
            SvgScene scene;
            scene.add_chain(c);
            fs::create_directories(out / "figures");
            detail::write_text_file(out / "figures" / "chain.svg", scene.render());
        }
    } else if (cfg.experiment == "quotient-demo") {
        CyclicGroup G = CyclicGroup::from_halfplane_factor(cfg.quotient.lambda);
        CyclicGroup H = CyclicGroup::from_halfplane_factor(
            std::pow(cfg.quotient.lambda, cfg.quotient.K));
        DescendedMap fd = descend_map(halfplane_radial_stretch(cfg.quotient.K), G, H, 500,
                                      substream(cfg.seed, 1));
        Rng rng(substream(cfg.seed, 2));
        double skew_sup = 0.0;
        double max_side = 0.45 * G.translation_length();
        for (int i = 0; i < cfg.quotient.triangles; ++i) {
            double r = rng.uniform(0.05 * max_side, max_side);
            EqTriangle T = equilateral_from_side(r, rng.mobius(0.6));
            skew_sup = std::max(skew_sup, quotient_skew(fd, T));
        }
        DistortionReport rep = quotient_qs_scan(fd, cfg.quotient.triples, cfg.seed, cfg.jobs);
        rep.fitted_constants["skew_supremum"] = skew_sup;
        log << "quotient-demo: skew supremum " << skew_sup << ", fitted C "
            << rep.fitted_constants.at("C") << "\n";
        finish_scan(rep);
    }

    detail::write_text_file(out / "report.json", envelope.dump(2) + "\n");
    if (!csv.empty()) detail::write_text_file(out / "report.csv", csv);
    return all_pass;
}

}  // namespace hypskew
