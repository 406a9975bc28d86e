#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "sqzsim/nonlinear.hpp"

using namespace sqzsim;

namespace {
double sinc2(double x) {
    if (std::abs(x) < 1e-12) return 1.0;
    const double s = std::sin(x) / x;
    return s * s;
}
}  // namespace

TEST_CASE("eta unit conversion") {
    CHECK(eta_from_percent(1000.0) == doctest::Approx(10.0));
    CHECK(eta_to_percent(10.0) == doctest::Approx(1000.0));
}

TEST_CASE("integrator input validation") {
    TwmParams p{10.0, 1.0, 0.0, 0.0};
    CHECK_THROWS_AS(integrate_twm({0.1, 0.0}, {0.0, 0.0}, p, 8), std::invalid_argument);
    CHECK_THROWS_AS(
        integrate_twm({std::nan(""), 0.0}, {0.0, 0.0}, p, 1024), std::invalid_argument);

    const TwmFields zero = integrate_twm({0.0, 0.0}, {0.0, 0.0}, p, 1024);
    CHECK(std::abs(zero.fh) == 0.0);
    CHECK(std::abs(zero.sh) == 0.0);
}

TEST_CASE("phase-matched SHG matches the tanh closed form") {
    const double eta = 10.0, length = 1.0;
    for (double p_mW : {0.001, 0.1, 1.0, 5.0, 18.4, 50.0, 100.0}) {
        const double p_in = p_mW * 1e-3;
        TwmParams params{eta, length, 0.0, p_in};
        const TwmFields out =
            integrate_twm({std::sqrt(p_in), 0.0}, {0.0, 0.0}, params, 2048);
        const double p_sh_ode = std::norm(out.sh);
        const double p_sh_analytic = shg_power(p_in, eta, length);
        CHECK(p_sh_ode == doctest::Approx(p_sh_analytic).epsilon(1e-6));
    }
}

TEST_CASE("SHG at the nominal operating point") {
    // 18.4 mW in, eta = 10 W^-1 cm^-2, 1 cm -> about 3.0 mW of SH
    const double p_sh = shg_power(0.0184, 10.0, 1.0);
    CHECK(p_sh == doctest::Approx(3.009e-3).epsilon(1e-3));
    CHECK(p_sh >= 3.0e-3);
    CHECK(p_sh <= 3.4e-3);
    CHECK(shg_power(0.0, 10.0, 1.0) == 0.0);
}

TEST_CASE("Manley-Rowe invariant under mismatch and seeding") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> amp(0.0, 0.4);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> dk(-20.0, 20.0);

    for (int trial = 0; trial < 30; ++trial) {
        const std::complex<double> a0 = std::polar(amp(rng), phase(rng));
        const std::complex<double> b0 = std::polar(amp(rng), phase(rng));
        TwmParams params{10.0, 1.0, dk(rng), std::norm(a0)};
        const TwmFields out = integrate_twm(a0, b0, params, 1024);
        const double before = std::norm(a0) + std::norm(b0);
        const double after = std::norm(out.fh) + std::norm(out.sh);
        if (before == 0.0) {
            CHECK(after == 0.0);
        } else {
            CHECK(std::abs(after - before) / before < 1e-9);
        }
    }
}

TEST_CASE("low-conversion limit P_SH -> eta L^2 P^2") {
    const double eta = 10.0, length = 1.0;
    // L sqrt(eta P) < 0.05  ->  P < 2.5e-4 W
    for (double p_in : {1e-6, 1e-5, 1e-4, 2.4e-4}) {
        const double exact = shg_power(p_in, eta, length);
        const double quadratic = eta * length * length * p_in * p_in;
        CHECK(exact == doctest::Approx(quadratic).epsilon(0.01));
    }
}

TEST_CASE("SHG monotonicity") {
    double prev = 0.0;
    for (double p = 1e-3; p <= 0.1; p += 1e-3) {
        const double v = shg_power(p, 10.0, 1.0);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(shg_power(0.01, 20.0, 1.0) > shg_power(0.01, 10.0, 1.0));
    CHECK(shg_power(0.01, 10.0, 2.0) > shg_power(0.01, 10.0, 1.0));
}

TEST_CASE("squeezing ratio closed form and endpoints") {
    CHECK(squeezing_ratio(0.0, 10.0, 1.0) == 1.0);

    const double r_1p5 = squeezing_ratio(0.0184, 10.0, 1.0);
    CHECK(ratio_to_db(r_1p5) == doctest::Approx(-1.5065).epsilon(1e-3));

    const double r_onchip_96 = squeezing_ratio(0.096, 10.0, 1.0);
    CHECK(ratio_to_db(r_onchip_96) == doctest::Approx(-6.405).epsilon(1e-3));

    // strictly decreasing in pump power
    double prev = 1.0;
    for (double p = 0.002; p <= 0.1; p += 0.002) {
        const double v = squeezing_ratio(p, 10.0, 1.0);
        CHECK(v < prev);
        prev = v;
    }

    CHECK(db_to_ratio(ratio_to_db(0.37)) == doctest::Approx(0.37).epsilon(1e-12));
}

TEST_CASE("OPA gain consistency with the squeezing ratio") {
    const OpaGain unity = opa_quadrature_gain(0.0, 10.0, 1.0);
    CHECK(unity.gain_x == 1.0);
    CHECK(unity.gain_y == 1.0);

    for (double p_in : {1e-3, 0.0184, 0.05, 0.096}) {
        const double p_sh = shg_power(p_in, 10.0, 1.0);
        const OpaGain g = opa_quadrature_gain(p_sh, 10.0, 1.0);
        CHECK(g.gain_x * g.gain_y == doctest::Approx(1.0).epsilon(1e-12));
        // variance gain gain_x^2 equals the chained SHG+OPA squeezing ratio
        CHECK(g.gain_x * g.gain_x ==
              doctest::Approx(squeezing_ratio(p_in, 10.0, 1.0)).epsilon(1e-9));
    }
}

TEST_CASE("QPM transfer of an ideal grating is sinc^2") {
    const double length = 0.81;
    const double period = 3.7;
    const DispersionTable disp = DispersionTable::linear(1544.0, 2.0 * M_PI / (period * 1e-4),
                                                         15.5, 6.0, 4001);

    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i) grid.push_back(1542.0 + 4.0 * i / 200.0);

    // numeric path: explicit zero phase-error samples
    PolingProfile numeric{period, length, std::vector<double>(16385, 0.0)};
    const std::vector<double> t_num = qpm_transfer(numeric, disp, grid);

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double dk_eff = disp.delta_k(grid[i]) - 2.0 * M_PI / (period * 1e-4);
        const double expected = sinc2(0.5 * dk_eff * length);
        CHECK(std::abs(t_num[i] - expected) < 1e-8);
    }

    // uniform analytic path agrees with the sampled path
    PolingProfile uniform{period, length, {}};
    const std::vector<double> t_uni = qpm_transfer(uniform, disp, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(t_uni[i] - t_num[i]) < 1e-8);
    }

    // peak at phase matching, first zero at dk_eff L = 2 pi
    CHECK(t_uni[100] == doctest::Approx(1.0).epsilon(1e-9));
    const double lambda_zero = 1544.0 + 2.0 * M_PI / (length * 15.5);
    const std::vector<double> t_zero = qpm_transfer(uniform, disp, {lambda_zero});
    CHECK(t_zero[0] < 1e-6);
}

TEST_CASE("noisy poling profiles broaden and suppress the peak") {
    const double length = 0.81, period = 3.7;
    const DispersionTable disp = DispersionTable::linear(1544.0, 2.0 * M_PI / (period * 1e-4),
                                                         15.5, 6.0, 4001);
    std::vector<double> grid;
    for (int i = 0; i <= 800; ++i) grid.push_back(1542.0 + 4.0 * i / 800.0);

    const PolingProfile noisy = make_noisy_profile(period, length, 4.6, 4096, 42);
    REQUIRE(noisy.phase_error.size() == 4096);
    CHECK(noisy.phase_error.front() == 0.0);

    const std::vector<double> t = qpm_transfer(noisy, disp, grid);
    double peak = 0.0;
    for (double v : t) peak = std::max(peak, v);
    CHECK(peak < 1.0);
    CHECK(peak > 0.0);

    // deterministic for a fixed seed
    const PolingProfile again = make_noisy_profile(period, length, 4.6, 4096, 42);
    CHECK(again.phase_error == noisy.phase_error);

    // sigma = 0 reduces to the ideal grating
    const PolingProfile clean = make_noisy_profile(period, length, 0.0, 4096, 42);
    const std::vector<double> t_clean = qpm_transfer(clean, disp, {1544.0});
    CHECK(t_clean[0] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("dispersion table interpolation and bounds") {
    DispersionTable t({1540.0, 1542.0, 1544.0}, {-4.0, 0.0, 4.0});
    CHECK(t.delta_k(1542.0) == doctest::Approx(0.0));
    CHECK(t.delta_k(1541.0) == doctest::Approx(-2.0));
    CHECK(t.delta_k(1543.5) == doctest::Approx(3.0));
    CHECK_THROWS_AS(t.delta_k(1539.9), std::out_of_range);
    CHECK_THROWS_AS(t.delta_k(1544.1), std::out_of_range);
    CHECK_THROWS_AS(DispersionTable({1540.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("qpm transfer rejects wavelengths off the dispersion table") {
    const DispersionTable disp = DispersionTable::linear(1544.0, 0.0, 15.5, 2.0, 101);
    PolingProfile uniform{3.7, 0.81, {}};
    CHECK_THROWS_AS(qpm_transfer(uniform, disp, {1550.0}), std::out_of_range);
}
