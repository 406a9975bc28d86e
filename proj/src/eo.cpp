#include "sqzsim/eo.hpp"

#include <cmath>
#include <stdexcept>

namespace sqzsim {

IndexShift index_shift(const EoMaterial& material, double e_z_V_per_m) {
    if (!std::isfinite(e_z_V_per_m)) throw std::invalid_argument("index_shift: nonfinite E_z");
    const double r13 = material.r13_pm_per_V * 1e-12;
    const double r33 = material.r33_pm_per_V * 1e-12;
    IndexShift out;
    out.n_o = material.n_o - 0.5 * r13 * std::pow(material.n_o, 3) * e_z_V_per_m;
    out.n_e = material.n_e - 0.5 * r33 * std::pow(material.n_e, 3) * e_z_V_per_m;
    return out;
}

double vpi_from_sensitivity(double dneff_dV, double lambda_m, double electrode_length_m) {
    if (dneff_dV <= 0.0) throw std::invalid_argument("vpi_from_sensitivity: dneff_dV must be > 0");
    if (lambda_m <= 0.0 || electrode_length_m <= 0.0)
        throw std::invalid_argument("vpi_from_sensitivity: lambda and length must be > 0");
    return lambda_m / (dneff_dV * electrode_length_m);
}

double phase_at(const PhaseShifter& shifter, double t_s) {
    double phi = M_PI * shifter.v_dc / shifter.vpi_V;
    if (shifter.rf) {
        phi += (M_PI * shifter.rf->v_pp / (2.0 * shifter.vpi_V)) *
               std::sin(2.0 * M_PI * shifter.rf->omega_hz * t_s);
    }
    return phi;
}

MziTransfer mzi_transfer(double phi) {
    const double s = std::sin(phi / 2.0);
    const double bar = s * s;
    return {bar, 1.0 - bar};
}

FilterAction filter_cascade(const DichroicFilter& filter) {
    if (filter.stages < 1) throw std::invalid_argument("filter_cascade: stages must be >= 1");
    if (filter.extinction_fh_dB < 0.0)
        throw std::invalid_argument("filter_cascade: extinction must be >= 0 dB");
    if (filter.transmission_sh < 0.0 || filter.transmission_sh > 1.0)
        throw std::invalid_argument("filter_cascade: SH transmission must be in [0, 1]");
    const double total_dB = filter.extinction_fh_dB * filter.stages;
    return {std::pow(10.0, -total_dB / 10.0), std::pow(filter.transmission_sh, filter.stages)};
}

}  // namespace sqzsim
