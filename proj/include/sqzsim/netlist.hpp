#pragma once

#include <string>

#include "sqzsim/config.hpp"
#include "sqzsim/eo.hpp"
#include "sqzsim/gaussian.hpp"

namespace sqzsim {

// Parameterized squeezing-sensor circuit: input splitter, SHG -> filter ->
// OPA -> filter squeezer chain, LO phase shifter, and the signal
// interferometer feeding the BHD ports. Monitor taps sit at the two filter
// drop ports.
struct PicNetlist {
    double wavelength_nm = 1544.0;
    double input_facet_loss_dB = 0.0;

    double input_splitter_vpi_V = 47.0;
    double input_splitter_bias_V = 0.0;

    double eta = 0.0;  // W^-1 cm^-2, shared by SHG and OPA sections
    double shg_length_cm = 0.0;
    double opa_length_cm = 0.0;
    DichroicFilter post_shg_filter;  // drops residual FH to the FH monitor
    DichroicFilter post_opa_filter;  // drops SH to the SH monitor

    PhaseShifter lo_shifter;
    double lo_path_loss_dB = 0.0;
    double squeezer_path_loss_dB = 0.0;

    std::size_t twm_steps_per_cm = 1024;

    double input_split_phi() const;  // phi_1
    double lo_phase() const;         // phi_LO

    std::string to_text() const;
    static PicNetlist from_text(const std::string& text);
};

PicNetlist build_pic(const Config& config);

struct PropagationResult {
    double p_offchip_W = 0.0;
    double p_onchip_W = 0.0;
    double p_squeezer_in_W = 0.0;  // FH driving the SHG
    double p_lo_W = 0.0;           // LO waveguide power after the splitter

    double p_fh_after_shg_W = 0.0;
    double p_sh_W = 0.0;  // SH driving the OPA

    double fh_monitor_W = 0.0;
    double sh_monitor_W = 0.0;

    double p_leak_W = 0.0;       // coherent FH leakage reaching the BHD
    double p_lo_at_bhd_W = 0.0;  // LO at the signal-interferometer input
    double eps = 0.0;            // leakage-to-LO power ratio
    double dissipated_W = 0.0;   // every accounted loss

    double opa_squeeze_r = 0.0;
    double onchip_squeeze_ratio = 1.0;  // squeezed-quadrature variance / vacuum
    double phi_lo = 0.0;

    // Mode 0: squeezer path, mode 1: LO path, at the signal interferometer.
    GaussianState state;
};

PropagationResult propagate(const PicNetlist& netlist, double laser_power_offchip_W);

// Powers at the filter drop ports (FH monitor, SH monitor).
std::pair<double, double> monitor_readout(const PropagationResult& result);

}  // namespace sqzsim
