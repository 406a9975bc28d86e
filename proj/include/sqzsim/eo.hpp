#pragma once

#include <optional>

namespace sqzsim {

// Pockels-effect material constants. r coefficients in pm/V.
struct EoMaterial {
    double n_o = 2.21;
    double n_e = 2.14;
    double r13_pm_per_V = 10.0;
    double r33_pm_per_V = 31.0;
};

struct IndexShift {
    double n_o;
    double n_e;
};

// n' = n - (1/2) r n^3 E_z for each polarization; E_z in V/m.
IndexShift index_shift(const EoMaterial& material, double e_z_V_per_m);

// Vpi * L = lambda / (dn_eff/dV); all lengths in meters.
double vpi_from_sensitivity(double dneff_dV, double lambda_m, double electrode_length_m);

struct RfTone {
    double v_pp = 0.0;     // peak-to-peak volts
    double omega_hz = 0.0; // tone frequency
};

struct PhaseShifter {
    double vpi_V = 0.0;
    double v_dc = 0.0;
    std::optional<RfTone> rf;
    double electrode_length_mm = 0.0;
};

// Instantaneous phase: pi Vdc/Vpi + (pi Vpp / (2 Vpi)) sin(Omega t).
double phase_at(const PhaseShifter& shifter, double t_s);

// MZI with a phase shifter in one arm, built from the sin/cos splitter
// convention: bar = sin^2(phi/2), cross = cos^2(phi/2).
struct MziTransfer {
    double t_bar;
    double t_cross;
};
MziTransfer mzi_transfer(double phi);

// Cascade of identical FH-dropping directional couplers; extinction is the
// per-stage FH suppression of the through path in dB, compounding over stages.
struct DichroicFilter {
    double extinction_fh_dB = 0.0;
    double transmission_sh = 1.0;
    int stages = 1;
};

struct FilterAction {
    double fh_leak_fraction;   // FH power fraction surviving in the through path
    double sh_transmission;    // SH power fraction kept
};
FilterAction filter_cascade(const DichroicFilter& filter);

}  // namespace sqzsim
