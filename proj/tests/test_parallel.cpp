#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sqzsim/fitting.hpp"
#include "sqzsim/nonlinear.hpp"
#include "sqzsim/parallel.hpp"

using namespace sqzsim;

TEST_CASE("parallel_map matches serial_map exactly") {
    auto f = [](std::size_t i) { return std::sin(0.001 * static_cast<double>(i)) * 3.7; };
    const std::vector<double> par = parallel_map(10000, f);
    const std::vector<double> ser = serial_map(10000, f);
    CHECK(par == ser);

    CHECK(parallel_map(0, f).empty());
    CHECK(serial_map(0, f).empty());
}

TEST_CASE("parallel QPM transfer matches the serial reference") {
    const DispersionTable disp =
        DispersionTable::linear(1544.0, 2.0 * M_PI / (3.7e-4), 15.5, 6.0, 2001);
    std::vector<double> grid;
    for (int i = 0; i <= 400; ++i) grid.push_back(1542.0 + 4.0 * i / 400.0);

    const PolingProfile noisy = make_noisy_profile(3.7, 0.81, 4.6, 2048, 5);
    const std::vector<double> par = qpm_transfer(noisy, disp, grid);
    const std::vector<double> ser = qpm_transfer_serial(noisy, disp, grid);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
}

TEST_CASE("parallel noise-band evaluation matches the pointwise model") {
    NoiseBandParams p;
    p.eta = 10.0;
    p.eps = 0.04;
    p.zeta = 0.2;
    p.p_in_W = 0.0184;
    p.length_cm = 1.0;
    std::vector<double> grid;
    for (int i = 0; i <= 180; ++i) grid.push_back(2.0 * M_PI * i / 180.0);

    const ModelBand band = noise_model_band(p, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double direct =
            locked_noise_ratio(p.eta, p.eps, p.zeta, p.p_in_W, p.length_cm, grid[i]);
        CHECK(band.lower[i] == direct);
        CHECK(band.upper[i] == direct);
    }
}
