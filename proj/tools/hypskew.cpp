#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypskew/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hypskew: hyperbolic skew / distortion experiment runner"};
    std::string config_path;
    std::string out_override;
    uint64_t seed_override = 0;
    int jobs_override = 0;
    bool render = false;

    app.add_option("--config", config_path, "experiment config (JSON)")->required();
    auto* seed_opt = app.add_option("--seed", seed_override, "override the config seed");
    auto* out_opt = app.add_option("--out", out_override, "override the output directory");
    auto* jobs_opt =
        app.add_option("--jobs", jobs_override, "worker count for scans")->envname("HYPSKEW_JOBS");
    app.add_flag("--render", render, "emit SVG figures under <out>/figures");

    CLI11_PARSE(app, argc, argv);

    hypskew::ExperimentConfig cfg;
    try {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot read config '" << config_path << "'\n";
            return 2;
        }
        nlohmann::json j = nlohmann::json::parse(in);
        cfg = hypskew::parse_config(j);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    if (*seed_opt) cfg.seed = seed_override;
    if (*out_opt) cfg.out = out_override;
    if (*jobs_opt) {
        if (jobs_override < 1) {
            std::cerr << "config error: --jobs must be positive\n";
            return 2;
        }
        cfg.jobs = jobs_override;
    }
    if (render) cfg.render = true;

    try {
        bool pass = hypskew::run_experiment(cfg, std::cout);
        if (!pass) {
            std::cerr << "verification failed\n";
            return 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
