#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace sqzsim {

// Degenerate three-wave mixing parameters. Amplitudes are in sqrt(W) so
// |A|^2 is power in watts; eta is the normalized efficiency in 1/(W cm^2)
// (1000 %/(W cm^2) == 10 W^-1 cm^-2); lengths in cm; delta_k in rad/cm.
struct TwmParams {
    double eta = 0.0;
    double length_cm = 0.0;
    double delta_k = 0.0;
    double p_in_W = 0.0;
};

inline double eta_from_percent(double pct_per_W_cm2) { return pct_per_W_cm2 / 100.0; }
inline double eta_to_percent(double eta) { return eta * 100.0; }

struct TwmFields {
    std::complex<double> fh;  // A(L), sqrt(W)
    std::complex<double> sh;  // B(L), sqrt(W)
};

// Fixed-step RK4 integration of
//   dA/dz = -i sqrt(eta) B A* exp(-i dk z)
//   dB/dz = -i sqrt(eta) A^2 exp(+i dk z)
// |A|^2 + |B|^2 is conserved.
TwmFields integrate_twm(std::complex<double> a0, std::complex<double> b0,
                        const TwmParams& params, std::size_t steps = 1024);

// Closed-form SHG output power at perfect phase matching:
// P_SH = P_in tanh^2(L sqrt(eta P_in)).
double shg_power(double p_in_W, double eta, double length_cm);

// Squeezed-quadrature variance ratio to vacuum:
// exp(-2 L sqrt(eta P_in) tanh(L sqrt(eta P_in))).
double squeezing_ratio(double p_in_W, double eta, double length_cm);

inline double ratio_to_db(double ratio) { return 10.0 * std::log10(ratio); }
inline double db_to_ratio(double db) { return std::pow(10.0, db / 10.0); }

// Amplitude gains of the phase-sensitive OPA with an undepleted SH pump:
// gain_x = exp(-L sqrt(eta P_SH)), gain_y = 1/gain_x.
struct OpaGain {
    double gain_x;
    double gain_y;
};
OpaGain opa_quadrature_gain(double p_sh_W, double eta, double length_cm);

// Poling grating with optional accumulated-phase error along z.
// phase_error holds the QPM phase deviation (rad) at equally spaced z samples
// spanning [0, length]; empty means a uniform ideal grating.
struct PolingProfile {
    double period_um = 0.0;
    double length_cm = 0.0;
    std::vector<double> phase_error;
};

// Random-walk phase-error realization: sigma is the phase diffusion in
// rad/sqrt(cm), i.e. std of the accumulated phase at z is sigma*sqrt(z).
PolingProfile make_noisy_profile(double period_um, double length_cm, double sigma,
                                 std::size_t samples, std::uint64_t seed);

// Two-column (lambda_nm, delta_k rad/cm) table with linear interpolation.
class DispersionTable {
public:
    DispersionTable() = default;
    DispersionTable(std::vector<double> lambda_nm, std::vector<double> dk);
    static DispersionTable load(const std::string& path);
    // Linear mismatch model around a phase-matched wavelength.
    static DispersionTable linear(double lambda0_nm, double dk0, double slope_per_nm,
                                  double span_nm, std::size_t points);

    double delta_k(double lambda_nm) const;  // throws std::out_of_range off-table
    double min_lambda() const { return lambda_nm_.front(); }
    double max_lambda() const { return lambda_nm_.back(); }

private:
    std::vector<double> lambda_nm_;
    std::vector<double> dk_;
};

// Normalized SHG transfer |(1/L) int exp(i(dk_eff z + theta(z))) dz|^2 per
// wavelength; dk_eff = delta_k(lambda) - 2*pi/period. Uniform gratings give
// sinc^2(dk_eff L / 2). The grid loop is OpenMP-parallel; qpm_transfer_serial
// is the reference kept for testing.
std::vector<double> qpm_transfer(const PolingProfile& profile, const DispersionTable& dispersion,
                                 const std::vector<double>& lambda_grid_nm);
std::vector<double> qpm_transfer_serial(const PolingProfile& profile,
                                        const DispersionTable& dispersion,
                                        const std::vector<double>& lambda_grid_nm);

}  // namespace sqzsim
