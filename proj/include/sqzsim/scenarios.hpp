#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqzsim/config.hpp"
#include "sqzsim/fitting.hpp"
#include "sqzsim/homodyne.hpp"

namespace sqzsim {

class UnknownScenario : public std::runtime_error {
public:
    explicit UnknownScenario(const std::string& name)
        : std::runtime_error("unknown scenario: " + name) {}
};

// Numerical failure during a scenario (fit non-convergence etc.).
class NumericalError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> scenario_names();

struct ScenarioResult {
    std::vector<std::string> files;  // paths relative to out_dir, manifest included
};

// Runs one named scenario, writing CSV/JSON/SVG artifacts plus manifest.json
// into out_dir. Deterministic for a fixed config + seed.
ScenarioResult run_scenario(const Config& config, const std::string& name,
                            const std::string& out_dir, std::uint64_t seed);

struct ValidationReport {
    bool ok = false;
    std::string text;  // resolved parameters with units and defaults applied
    std::vector<std::string> warnings;
};

ValidationReport validate_config(const std::string& path);

// Detection-chain parameters resolved from the shared config keys.
BhdConfig bhd_from_config(const Config& config);

}  // namespace sqzsim
