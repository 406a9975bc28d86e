#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace sqzsim {

struct BhdConfig {
    double responsivity_A_per_W = 1.0;
    double conversion_gain_V_per_W = 1.25e5;
    double impedance_ohm = 50.0;
    double quantum_efficiency = 1.0;
    double electronic_floor_W_per_Hz = 0.0;  // analyzer-equivalent watts per Hz
    double rbw_hz = 60e3;
    double wavelength_nm = 1544.0;
};

struct RfSpectrum {
    std::vector<double> freqs_hz;
    std::vector<double> psd_W;  // power per RBW bin at the analyzer
    double rbw_hz = 0.0;
    double p_lo_W = 0.0;
};

// Signal-interferometer phase that zeroes the BHD DC balance
//   cos(phi2)(1 - eps) + 2 sin(phi2) sqrt(eps) cos(phi_lo) = 0.
// Returns the analytic arccos branch with residual < 1e-12; eps = 0 gives
// exactly pi/2.
double lock_phase(double eps, double phi_lo);

double lock_residual(double eps, double phi2, double phi_lo);

// Differential DC power:
// cos(phi2) P_LO (1 - eps) + 2 sin(phi2) sqrt(eps) P_LO cos(phi_lo).
double bhd_dc(double eps, double phi2, double phi_lo, double p_lo_W);

// Quadrature variances entering the noise model, as ratios to vacuum.
struct QuadVariances {
    double x = 1.0;  // squeezed quadrature (or LO X)
    double y = 1.0;  // anti-squeezed quadrature (or LO Y)
};

// BHD noise power referenced to the leak-free shot-noise measurement at the
// same LO power. With eps = 0 and phi2 = pi/2 this reduces to the textbook
// cos^2/sin^2 quadrature readout.
double bhd_noise(double eps, double phi2, double phi_lo, const QuadVariances& signal,
                 const QuadVariances& lo);

// RF calibration peak power at the modulation frequency:
// (2 eps R^2 P_LO^2 / Z) (pi/2)^3 (Vpp/Vpi) sin^2(pi Vdc/Vpi).
double cal_peak_power(double v_dc, double v_pp, double eps, double vpi, double p_lo_W,
                      double responsivity, double impedance_ohm);

struct Tone {
    double freq_hz;
    double power_W;  // analyzer power added to the containing bin
};

// Analyzer power of the shot-noise floor per RBW bin for a given LO power,
// before electronic noise; derived from 2 h nu P_LO and the conversion gain.
double shot_floor_bin_power(const BhdConfig& cfg, double p_lo_W);

// Flat shot-noise floor scaled by noise_ratio, plus the electronic floor and
// single-bin tones.
RfSpectrum synth_spectrum(double noise_ratio, double p_lo_W, const std::vector<Tone>& tones,
                          const BhdConfig& cfg, double f_min_hz, double f_max_hz);

// Fractional SNR gain of `squeezed` over `reference` for the tone at
// signal_freq: (tone/floor)_sq / (tone/floor)_ref - 1.
double snr_improvement(const RfSpectrum& squeezed, const RfSpectrum& reference,
                       double signal_freq_hz);

inline double watts_to_dbm(double w) { return 10.0 * std::log10(w * 1e3); }
inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

}  // namespace sqzsim
