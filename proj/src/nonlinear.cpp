#include "sqzsim/nonlinear.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sqzsim/parallel.hpp"

namespace sqzsim {

namespace {

using cd = std::complex<double>;

struct Fields {
    cd a;
    cd b;
};

Fields twm_rhs(double z, const Fields& f, double sqrt_eta, double dk) {
    const cd phase = std::polar(1.0, dk * z);
    Fields d;
    d.a = cd(0.0, -1.0) * sqrt_eta * f.b * std::conj(f.a) / phase;
    d.b = cd(0.0, -1.0) * sqrt_eta * f.a * f.a * phase;
    return d;
}

}  // namespace

TwmFields integrate_twm(std::complex<double> a0, std::complex<double> b0,
                        const TwmParams& params, std::size_t steps) {
    if (!std::isfinite(a0.real()) || !std::isfinite(a0.imag()) || !std::isfinite(b0.real()) ||
        !std::isfinite(b0.imag()))
        throw std::invalid_argument("integrate_twm: nonfinite input amplitudes");
    if (params.eta < 0.0 || params.length_cm <= 0.0)
        throw std::invalid_argument("integrate_twm: eta >= 0 and L > 0 required");
    if (steps < 16) throw std::invalid_argument("integrate_twm: steps must be >= 16");

    const double sqrt_eta = std::sqrt(params.eta);
    const double dk = params.delta_k;
    const double h = params.length_cm / static_cast<double>(steps);

    Fields f{a0, b0};
    double z = 0.0;
    for (std::size_t i = 0; i < steps; ++i) {
        const Fields k1 = twm_rhs(z, f, sqrt_eta, dk);
        const Fields k2 = twm_rhs(z + 0.5 * h, {f.a + 0.5 * h * k1.a, f.b + 0.5 * h * k1.b},
                                  sqrt_eta, dk);
        const Fields k3 = twm_rhs(z + 0.5 * h, {f.a + 0.5 * h * k2.a, f.b + 0.5 * h * k2.b},
                                  sqrt_eta, dk);
        const Fields k4 = twm_rhs(z + h, {f.a + h * k3.a, f.b + h * k3.b}, sqrt_eta, dk);
        f.a += (h / 6.0) * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
        f.b += (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
        z += h;
    }
    return {f.a, f.b};
}

double shg_power(double p_in_W, double eta, double length_cm) {
    const double t = std::tanh(length_cm * std::sqrt(eta * p_in_W));
    return p_in_W * t * t;
}

double squeezing_ratio(double p_in_W, double eta, double length_cm) {
    const double g = length_cm * std::sqrt(eta * p_in_W);
    return std::exp(-2.0 * g * std::tanh(g));
}

OpaGain opa_quadrature_gain(double p_sh_W, double eta, double length_cm) {
    const double gx = std::exp(-length_cm * std::sqrt(eta * p_sh_W));
    return {gx, 1.0 / gx};
}

PolingProfile make_noisy_profile(double period_um, double length_cm, double sigma,
                                 std::size_t samples, std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("make_noisy_profile: need >= 2 samples");
    PolingProfile p;
    p.period_um = period_um;
    p.length_cm = length_cm;
    p.phase_error.resize(samples);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double dz = length_cm / static_cast<double>(samples - 1);
    double theta = 0.0;
    p.phase_error[0] = 0.0;
    for (std::size_t i = 1; i < samples; ++i) {
        theta += sigma * std::sqrt(dz) * gauss(rng);
        p.phase_error[i] = theta;
    }
    return p;
}

DispersionTable::DispersionTable(std::vector<double> lambda_nm, std::vector<double> dk)
    : lambda_nm_(std::move(lambda_nm)), dk_(std::move(dk)) {
    if (lambda_nm_.size() != dk_.size() || lambda_nm_.size() < 2)
        throw std::invalid_argument("DispersionTable: need >= 2 matching samples");
    if (!std::is_sorted(lambda_nm_.begin(), lambda_nm_.end()))
        throw std::invalid_argument("DispersionTable: wavelengths must be increasing");
}

DispersionTable DispersionTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("DispersionTable: cannot open " + path);
    std::vector<double> lam, dk;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double l, k;
        if (ss >> l >> k) {
            lam.push_back(l);
            dk.push_back(k);
        }
    }
    return DispersionTable(std::move(lam), std::move(dk));
}

DispersionTable DispersionTable::linear(double lambda0_nm, double dk0, double slope_per_nm,
                                        double span_nm, std::size_t points) {
    std::vector<double> lam(points), dk(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double l =
            lambda0_nm - span_nm / 2.0 + span_nm * static_cast<double>(i) / (points - 1);
        lam[i] = l;
        dk[i] = dk0 + slope_per_nm * (l - lambda0_nm);
    }
    return DispersionTable(std::move(lam), std::move(dk));
}

double DispersionTable::delta_k(double lambda_nm) const {
    if (lambda_nm < lambda_nm_.front() || lambda_nm > lambda_nm_.back())
        throw std::out_of_range("DispersionTable: wavelength outside table range");
    const auto it = std::upper_bound(lambda_nm_.begin(), lambda_nm_.end(), lambda_nm);
    const std::size_t hi = std::min<std::size_t>(
        static_cast<std::size_t>(it - lambda_nm_.begin()), lambda_nm_.size() - 1);
    const std::size_t lo = hi - 1;
    const double t = (lambda_nm - lambda_nm_[lo]) / (lambda_nm_[hi] - lambda_nm_[lo]);
    return dk_[lo] + t * (dk_[hi] - dk_[lo]);
}

namespace {

double transfer_at(const PolingProfile& profile, double dk_eff) {
    const double L = profile.length_cm;
    if (profile.phase_error.empty()) {
        const double x = dk_eff * L / 2.0;
        const double s = (std::abs(x) < 1e-12) ? 1.0 : std::sin(x) / x;
        return s * s;
    }
    // Trapezoid over the sampled accumulated phase.
    const std::size_t n = profile.phase_error.size();
    const double dz = L / static_cast<double>(n - 1);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = dz * static_cast<double>(i);
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        acc += w * std::polar(1.0, dk_eff * z + profile.phase_error[i]);
    }
    acc *= dz / L;
    return std::norm(acc);
}

}  // namespace

std::vector<double> qpm_transfer(const PolingProfile& profile, const DispersionTable& dispersion,
                                 const std::vector<double>& lambda_grid_nm) {
    if (profile.period_um <= 0.0 || profile.length_cm <= 0.0)
        throw std::invalid_argument("qpm_transfer: period and length must be positive");
    // Validate the grid up front; the parallel loop must not throw.
    for (double l : lambda_grid_nm) {
        if (l < dispersion.min_lambda() || l > dispersion.max_lambda())
            throw std::out_of_range("qpm_transfer: wavelength outside dispersion table");
    }
    const double grating_k = 2.0 * M_PI / (profile.period_um * 1e-4);  // rad/cm
    return parallel_map(lambda_grid_nm.size(), [&](std::size_t i) {
        return transfer_at(profile, dispersion.delta_k(lambda_grid_nm[i]) - grating_k);
    });
}

std::vector<double> qpm_transfer_serial(const PolingProfile& profile,
                                        const DispersionTable& dispersion,
                                        const std::vector<double>& lambda_grid_nm) {
    if (profile.period_um <= 0.0 || profile.length_cm <= 0.0)
        throw std::invalid_argument("qpm_transfer: period and length must be positive");
    const double grating_k = 2.0 * M_PI / (profile.period_um * 1e-4);
    return serial_map(lambda_grid_nm.size(), [&](std::size_t i) {
        return transfer_at(profile, dispersion.delta_k(lambda_grid_nm[i]) - grating_k);
    });
}

}  // namespace sqzsim
