#include "sqzsim/homodyne.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sqzsim {

namespace {
constexpr double kPlanck = 6.62607015e-34;
constexpr double kLightSpeed = 2.99792458e8;
}  // namespace

double lock_residual(double eps, double phi2, double phi_lo) {
    return std::cos(phi2) * (1.0 - eps) + 2.0 * std::sin(phi2) * std::sqrt(eps) * std::cos(phi_lo);
}

double lock_phase(double eps, double phi_lo) {
    if (eps < 0.0 || eps >= 1.0) throw std::invalid_argument("lock_phase: eps must be in [0, 1)");
    if (eps == 0.0) return M_PI / 2.0;
    const double c = std::cos(phi_lo);
    const double num = 2.0 * std::sqrt(eps) * c;
    const double den = std::sqrt(4.0 * eps * c * c + eps * eps - 2.0 * eps + 1.0);
    double best_phi = 0.0;
    double best_res = std::numeric_limits<double>::infinity();
    for (double s1 : {1.0, -1.0}) {
        for (double s2 : {1.0, -1.0}) {
            const double phi2 = s1 * std::acos(std::clamp(s2 * num / den, -1.0, 1.0));
            const double r = std::abs(lock_residual(eps, phi2, phi_lo));
            if (r < best_res) {
                best_res = r;
                best_phi = phi2;
            }
        }
    }
    if (best_res > 1e-10) throw std::runtime_error("lock_phase: no analytic root found");
    return best_phi;
}

double bhd_dc(double eps, double phi2, double phi_lo, double p_lo_W) {
    if (eps < 0.0 || eps >= 1.0) throw std::invalid_argument("bhd_dc: eps must be in [0, 1)");
    return p_lo_W * lock_residual(eps, phi2, phi_lo);
}

double bhd_noise(double eps, double phi2, double phi_lo, const QuadVariances& signal,
                 const QuadVariances& lo) {
    if (signal.x < 0.0 || signal.y < 0.0 || lo.x < 0.0 || lo.y < 0.0)
        throw std::invalid_argument("bhd_noise: variances must be >= 0");
    const double c2 = std::cos(phi2) * std::cos(phi2);
    const double s2 = std::sin(phi2) * std::sin(phi2);
    const double cl2 = std::cos(phi_lo) * std::cos(phi_lo);
    const double sl2 = std::sin(phi_lo) * std::sin(phi_lo);
    return c2 * (cl2 * lo.x + sl2 * lo.y + eps * signal.x) +
           s2 * (cl2 * signal.x + sl2 * signal.y + eps * lo.x) +
           2.0 * std::sin(2.0 * phi2) * std::sqrt(eps) * std::cos(phi_lo) * (lo.x - signal.x);
}

double cal_peak_power(double v_dc, double v_pp, double eps, double vpi, double p_lo_W,
                      double responsivity, double impedance_ohm) {
    if (vpi <= 0.0) throw std::invalid_argument("cal_peak_power: Vpi must be > 0");
    const double half_pi_cubed = std::pow(M_PI / 2.0, 3);
    const double s = std::sin(M_PI * v_dc / vpi);
    return (2.0 * eps * responsivity * responsivity * p_lo_W * p_lo_W / impedance_ohm) *
           half_pi_cubed * (v_pp / vpi) * s * s;
}

double shot_floor_bin_power(const BhdConfig& cfg, double p_lo_W) {
    const double nu = kLightSpeed / (cfg.wavelength_nm * 1e-9);
    // Optical-power-equivalent shot noise 2 h nu P_LO (W^2/Hz), through the
    // receiver conversion gain into analyzer watts per RBW bin.
    const double var_opt = 2.0 * kPlanck * nu * p_lo_W * cfg.quantum_efficiency * cfg.rbw_hz;
    const double v2 = cfg.conversion_gain_V_per_W * cfg.conversion_gain_V_per_W * var_opt;
    return v2 / cfg.impedance_ohm;
}

RfSpectrum synth_spectrum(double noise_ratio, double p_lo_W, const std::vector<Tone>& tones,
                          const BhdConfig& cfg, double f_min_hz, double f_max_hz) {
    if (f_max_hz <= f_min_hz || cfg.rbw_hz <= 0.0)
        throw std::invalid_argument("synth_spectrum: bad frequency range or RBW");
    if (p_lo_W < 0.0) throw std::invalid_argument("synth_spectrum: P_LO must be >= 0");
    RfSpectrum spec;
    spec.rbw_hz = cfg.rbw_hz;
    spec.p_lo_W = p_lo_W;
    const std::size_t n_bins =
        static_cast<std::size_t>(std::floor((f_max_hz - f_min_hz) / cfg.rbw_hz)) + 1;
    const double shot = shot_floor_bin_power(cfg, p_lo_W) * noise_ratio;
    const double elec = cfg.electronic_floor_W_per_Hz * cfg.rbw_hz;
    spec.freqs_hz.resize(n_bins);
    spec.psd_W.assign(n_bins, shot + elec);
    for (std::size_t i = 0; i < n_bins; ++i)
        spec.freqs_hz[i] = f_min_hz + cfg.rbw_hz * static_cast<double>(i);
    for (const Tone& tone : tones) {
        if (tone.freq_hz < f_min_hz || tone.freq_hz > f_max_hz) continue;
        const auto bin = static_cast<std::size_t>(
            std::llround((tone.freq_hz - f_min_hz) / cfg.rbw_hz));
        spec.psd_W[std::min(bin, n_bins - 1)] += tone.power_W;
    }
    return spec;
}

namespace {

// Median of the floor bins in a window around the tone, tone bin excluded.
double local_floor(const RfSpectrum& spec, std::size_t bin) {
    const std::size_t n = spec.psd_W.size();
    const std::size_t lo = bin > 20 ? bin - 20 : 0;
    const std::size_t hi = std::min(n, bin + 21);
    std::vector<double> window;
    for (std::size_t i = lo; i < hi; ++i) {
        if (i + 1 >= bin && i <= bin + 1) continue;
        window.push_back(spec.psd_W[i]);
    }
    if (window.empty()) throw std::runtime_error("snr_improvement: spectrum too narrow");
    std::nth_element(window.begin(), window.begin() + window.size() / 2, window.end());
    return window[window.size() / 2];
}

}  // namespace

double snr_improvement(const RfSpectrum& squeezed, const RfSpectrum& reference,
                       double signal_freq_hz) {
    if (squeezed.freqs_hz.size() != reference.freqs_hz.size() ||
        squeezed.rbw_hz != reference.rbw_hz)
        throw std::invalid_argument("snr_improvement: spectra must share grids");
    if (squeezed.freqs_hz.empty() || signal_freq_hz < squeezed.freqs_hz.front() ||
        signal_freq_hz > squeezed.freqs_hz.back())
        throw std::runtime_error("snr_improvement: tone not found in spectrum");
    const auto bin = static_cast<std::size_t>(
        std::llround((signal_freq_hz - squeezed.freqs_hz.front()) / squeezed.rbw_hz));
    const double floor_sq = local_floor(squeezed, bin);
    const double floor_ref = local_floor(reference, bin);
    const double tone_sq = squeezed.psd_W[bin] - floor_sq;
    const double tone_ref = reference.psd_W[bin] - floor_ref;
    if (tone_sq <= 0.0 || tone_ref <= 0.0)
        throw std::runtime_error("snr_improvement: tone not found in spectrum");
    return (tone_sq / floor_sq) / (tone_ref / floor_ref) - 1.0;
}

}  // namespace sqzsim
