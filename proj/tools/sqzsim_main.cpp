// sqzsim: scenario-driven squeezed-light sensor simulator.
//
// Usage:
//   sqzsim <scenario> --config <file> --out <dir> [--seed N] [--set key=value]...
//   sqzsim validate --config <file>
//   sqzsim list
//
// Exit codes: 0 success, 1 config/data error, 2 usage error, 3 numerical failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqzsim/config.hpp"
#include "sqzsim/scenarios.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Integrated squeezed-light phase sensor simulator"};
    app.require_subcommand(0);

    std::string scenario;
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    std::vector<std::string> overrides;

    app.add_option("scenario", scenario, "scenario name, `validate`, or `list`")->required();
    app.add_option("--config", config_path, "config file path");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "RNG seed for stochastic elements");
    app.add_option("--set", overrides, "config override key=value (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (scenario == "list") {
        for (const auto& name : sqzsim::scenario_names()) std::cout << name << "\n";
        return 0;
    }

    if (config_path.empty()) {
        std::cerr << "error: --config is required\n";
        return 2;
    }

    try {
        if (scenario == "validate") {
            const sqzsim::ValidationReport report = sqzsim::validate_config(config_path);
            std::cout << report.text;
            for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
            std::cout << (report.ok ? "config OK\n" : "config INVALID\n");
            return report.ok ? 0 : 1;
        }

        const auto names = sqzsim::scenario_names();
        if (std::find(names.begin(), names.end(), scenario) == names.end()) {
            std::cerr << "error: unknown scenario `" << scenario << "` (see `sqzsim list`)\n";
            return 2;
        }

        sqzsim::Config cfg = sqzsim::Config::parse_file(config_path);
        for (const std::string& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                std::cerr << "error: --set expects key=value, got `" << kv << "`\n";
                return 2;
            }
            cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
        }

        const sqzsim::ScenarioResult result = sqzsim::run_scenario(cfg, scenario, out_dir, seed);
        std::cout << scenario << ": wrote " << result.files.size() << " files to " << out_dir
                  << "\n";
        return 0;
    } catch (const sqzsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const sqzsim::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
