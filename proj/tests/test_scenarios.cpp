#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sqzsim/scenarios.hpp"

using namespace sqzsim;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string config_path() {
    const char* path = std::getenv("SQZSIM_CONFIG");
    REQUIRE(path != nullptr);
    return path;
}

Config default_config() { return Config::parse_file(config_path()); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("sqzsim_test_" + name);
    fs::remove_all(dir);
    return dir;
}

int run_cli(const std::string& args) {
    const char* bin = std::getenv("SQZSIM_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("config parsing") {
    const Config cfg = Config::parse_text(
        "# comment\n"
        "a.b = 1.5\n"
        "  a.c =  hello  \n"
        "\n"
        "d = -3\n");
    CHECK(cfg.get_double("a.b") == doctest::Approx(1.5));
    CHECK(cfg.get_string("a.c") == "hello");
    CHECK(cfg.get_int("d", 0) == -3);
    CHECK(cfg.get_double("missing", 9.0) == 9.0);
    CHECK_THROWS_AS(cfg.get_double("missing"), ConfigError);
    CHECK_THROWS_AS(cfg.get_double("a.c"), ConfigError);
    CHECK_THROWS_AS(Config::parse_text("not an assignment\n"), ConfigError);

    Config cfg2 = Config::parse_text("x = 1\ny = 2\n");
    cfg2.get_double("x");
    const auto unknown = cfg2.unknown_keys();
    REQUIRE(unknown.size() == 1);
    CHECK(unknown[0] == "y");
}

TEST_CASE("every scenario runs and writes a complete manifest") {
    const Config cfg = default_config();
    for (const std::string& name : scenario_names()) {
        const fs::path dir = fresh_dir(name);
        const ScenarioResult result = run_scenario(cfg, name, dir.string(), 1);
        REQUIRE(fs::exists(dir / "manifest.json"));

        const json manifest = json::parse(slurp(dir / "manifest.json"));
        CHECK(manifest["scenario"] == name);
        CHECK(manifest["seed"] == 1);
        CHECK(manifest["schema_version"] == 1);
        CHECK(manifest.contains("summary"));
        CHECK(manifest["parameters"].size() > 10);

        // every file listed exists, and every file in the directory is listed
        for (const auto& f : manifest["files"]) {
            CHECK(fs::exists(dir / f.get<std::string>()));
        }
        std::size_t on_disk = 0;
        for (const auto& entry : fs::directory_iterator(dir)) {
            (void)entry;
            ++on_disk;
        }
        CHECK(on_disk == manifest["files"].size());
        CHECK(result.files.size() == manifest["files"].size());
    }
}

TEST_CASE("scenario output is deterministic for a fixed seed") {
    const Config cfg = default_config();
    for (const std::string& name : {std::string("qpm-curve"), std::string("lo-calibration")}) {
        const fs::path dir_a = fresh_dir(name + "_a");
        const fs::path dir_b = fresh_dir(name + "_b");
        run_scenario(cfg, name, dir_a.string(), 7);
        run_scenario(cfg, name, dir_b.string(), 7);
        for (const auto& entry : fs::directory_iterator(dir_a)) {
            const fs::path rel = entry.path().filename();
            if (rel.extension() == ".csv") {
                CHECK(slurp(entry.path()) == slurp(dir_b / rel));
            }
        }

        // a different seed changes the noisy artifacts
        const fs::path dir_c = fresh_dir(name + "_c");
        run_scenario(cfg, name, dir_c.string(), 8);
        bool any_diff = false;
        for (const auto& entry : fs::directory_iterator(dir_a)) {
            const fs::path rel = entry.path().filename();
            if (rel.extension() == ".csv" && slurp(entry.path()) != slurp(dir_c / rel))
                any_diff = true;
        }
        CHECK(any_diff);
    }
}

TEST_CASE("scenario errors") {
    const Config cfg = default_config();
    CHECK_THROWS_AS(run_scenario(cfg, "no-such-thing", fresh_dir("err").string(), 1),
                    UnknownScenario);

    Config bad = default_config();
    bad.set("scenario.shg.points", 0.0);
    CHECK_THROWS_AS(run_scenario(bad, "shg-efficiency", fresh_dir("err2").string(), 1),
                    ConfigError);
}

TEST_CASE("config validation report") {
    const ValidationReport report = validate_config(config_path());
    CHECK(report.ok);
    CHECK(report.text.find("squeezer.eta_pct_per_Wcm2") != std::string::npos);
    CHECK(report.warnings.empty());

    const fs::path tmp = fs::temp_directory_path() / "sqzsim_cfg_unknown.cfg";
    {
        std::ofstream out(tmp);
        out << "squeezer.eta_pct_per_Wcm2 = 1000\n";
        out << "mystery.key = 3\n";
    }
    const ValidationReport warned = validate_config(tmp.string());
    CHECK(warned.ok);
    REQUIRE(warned.warnings.size() == 1);
    CHECK(warned.warnings[0].find("mystery.key") != std::string::npos);
}

TEST_CASE("command-line exit codes") {
    const std::string cfg = config_path();
    const fs::path dir = fresh_dir("cli");

    CHECK(run_cli("list") == 0);
    CHECK(run_cli("shg-efficiency --config " + cfg + " --out " + (dir / "ok").string() +
                  " --seed 3") == 0);
    // usage errors
    CHECK(run_cli("") == 2);
    CHECK(run_cli("no-such-scenario --config " + cfg + " --out " + (dir / "x").string()) == 2);
    CHECK(run_cli("shg-efficiency --bogus-flag") == 2);
    // config/data errors
    CHECK(run_cli("shg-efficiency --config /nonexistent.cfg --out " + (dir / "y").string()) == 1);
    CHECK(run_cli("shg-efficiency --config " + cfg + " --out " + (dir / "z").string() +
                  " --set scenario.shg.points=0") == 1);
    // overrides apply
    CHECK(run_cli("validate --config " + cfg) == 0);
}
