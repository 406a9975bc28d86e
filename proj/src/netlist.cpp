#include "sqzsim/netlist.hpp"

#include <cmath>
#include <utility>

#include "sqzsim/nonlinear.hpp"

namespace sqzsim {

namespace {

double db_to_transmission(double db) { return std::pow(10.0, -db / 10.0); }

double require_nonnegative(const Config& cfg, const std::string& key, double fallback) {
    const double v = cfg.get_double(key, fallback);
    if (v < 0.0) throw ConfigError(key, "must be >= 0");
    return v;
}

double require_positive(const Config& cfg, const std::string& key, double fallback) {
    const double v = cfg.get_double(key, fallback);
    if (v <= 0.0) throw ConfigError(key, "must be > 0");
    return v;
}

}  // namespace

double PicNetlist::input_split_phi() const {
    return M_PI * input_splitter_bias_V / input_splitter_vpi_V;
}

double PicNetlist::lo_phase() const { return phase_at(lo_shifter, 0.0); }

PicNetlist build_pic(const Config& cfg) {
    PicNetlist n;
    n.wavelength_nm = require_positive(cfg, "laser.wavelength_nm", 1544.0);
    n.input_facet_loss_dB = require_nonnegative(cfg, "input.facet_loss_dB", 0.0);
    n.input_splitter_vpi_V = require_positive(cfg, "input.splitter_vpi_V", 47.0);
    n.input_splitter_bias_V = cfg.get_double("input.splitter_bias_V", 0.0);

    // eta is required; the config carries it in %/(W cm^2).
    n.eta = eta_from_percent(cfg.get_double("squeezer.eta_pct_per_Wcm2"));
    if (n.eta < 0.0) throw ConfigError("squeezer.eta_pct_per_Wcm2", "must be >= 0");
    n.shg_length_cm = require_positive(cfg, "squeezer.shg_length_cm", 1.0);
    n.opa_length_cm = require_positive(cfg, "squeezer.opa_length_cm", 1.0);

    n.post_shg_filter.stages = static_cast<int>(cfg.get_int("squeezer.filter_stages", 3));
    n.post_shg_filter.extinction_fh_dB =
        require_nonnegative(cfg, "squeezer.filter_extinction_dB_per_stage", 6.0);
    n.post_shg_filter.transmission_sh = cfg.get_double("squeezer.filter_sh_transmission", 1.0);
    if (n.post_shg_filter.transmission_sh < 0.0 || n.post_shg_filter.transmission_sh > 1.0)
        throw ConfigError("squeezer.filter_sh_transmission", "must be in [0, 1]");
    n.post_opa_filter = n.post_shg_filter;

    n.lo_shifter.vpi_V = require_positive(cfg, "lo.vpi_V", 28.6);
    n.lo_shifter.v_dc = cfg.get_double("lo.bias_V", 0.0);
    n.lo_path_loss_dB = require_nonnegative(cfg, "lo.path_loss_dB", 0.0);
    n.squeezer_path_loss_dB = require_nonnegative(cfg, "squeezer.path_loss_dB", 0.0);
    n.twm_steps_per_cm = static_cast<std::size_t>(cfg.get_int("squeezer.twm_steps_per_cm", 1024));
    return n;
}

std::string PicNetlist::to_text() const {
    Config cfg;
    cfg.set("laser.wavelength_nm", wavelength_nm);
    cfg.set("input.facet_loss_dB", input_facet_loss_dB);
    cfg.set("input.splitter_vpi_V", input_splitter_vpi_V);
    cfg.set("input.splitter_bias_V", input_splitter_bias_V);
    cfg.set("squeezer.eta_pct_per_Wcm2", eta_to_percent(eta));
    cfg.set("squeezer.shg_length_cm", shg_length_cm);
    cfg.set("squeezer.opa_length_cm", opa_length_cm);
    cfg.set("squeezer.filter_stages", static_cast<double>(post_shg_filter.stages));
    cfg.set("squeezer.filter_extinction_dB_per_stage", post_shg_filter.extinction_fh_dB);
    cfg.set("squeezer.filter_sh_transmission", post_shg_filter.transmission_sh);
    cfg.set("squeezer.path_loss_dB", squeezer_path_loss_dB);
    cfg.set("squeezer.twm_steps_per_cm", static_cast<double>(twm_steps_per_cm));
    cfg.set("lo.vpi_V", lo_shifter.vpi_V);
    cfg.set("lo.bias_V", lo_shifter.v_dc);
    cfg.set("lo.path_loss_dB", lo_path_loss_dB);
    return cfg.serialize();
}

PicNetlist PicNetlist::from_text(const std::string& text) {
    return build_pic(Config::parse_text(text));
}

PropagationResult propagate(const PicNetlist& n, double laser_power_offchip_W) {
    if (laser_power_offchip_W < 0.0)
        throw std::invalid_argument("propagate: laser power must be >= 0");

    PropagationResult r;
    r.p_offchip_W = laser_power_offchip_W;
    r.phi_lo = n.lo_phase();
    r.state = vacuum_state(2);

    const double t_facet = db_to_transmission(n.input_facet_loss_dB);
    r.p_onchip_W = laser_power_offchip_W * t_facet;
    r.dissipated_W += laser_power_offchip_W - r.p_onchip_W;

    // Input splitter: cross port pumps the squeezer, bar port is the LO.
    const MziTransfer split = mzi_transfer(n.input_split_phi());
    r.p_squeezer_in_W = r.p_onchip_W * split.t_cross;
    r.p_lo_W = r.p_onchip_W * split.t_bar;

    // SHG section (classical, pump depletion included).
    const std::size_t steps = std::max<std::size_t>(
        16, static_cast<std::size_t>(std::ceil(n.shg_length_cm * n.twm_steps_per_cm)));
    const TwmFields shg = integrate_twm(std::sqrt(r.p_squeezer_in_W), 0.0,
                                        {n.eta, n.shg_length_cm, 0.0, r.p_squeezer_in_W}, steps);
    r.p_fh_after_shg_W = std::norm(shg.fh);
    r.p_sh_W = std::norm(shg.sh);
    // RK4 conserves |A|^2+|B|^2 to ~1e-12; fold the residual into the loss
    // account so the global budget closes exactly.
    r.dissipated_W += r.p_squeezer_in_W - r.p_fh_after_shg_W - r.p_sh_W;

    // Post-SHG filter: residual FH is dropped to the monitor except for the
    // leakage fraction; SH stays in the waveguide.
    const FilterAction f1 = filter_cascade(n.post_shg_filter);
    double leak_W = r.p_fh_after_shg_W * f1.fh_leak_fraction;
    r.fh_monitor_W = r.p_fh_after_shg_W * (1.0 - f1.fh_leak_fraction);
    const double sh_at_opa_W = r.p_sh_W * f1.sh_transmission;
    r.dissipated_W += r.p_sh_W * (1.0 - f1.sh_transmission);

    // OPA: classical SH pump is undepleted; the squeezer-path Gaussian state
    // gets the phase-sensitive gain. The leakage is carried along unchanged.
    r.opa_squeeze_r = n.opa_length_cm * std::sqrt(n.eta * sh_at_opa_W);
    r.state = apply_squeezer(r.state, 0, r.opa_squeeze_r);

    // Post-OPA filter: SH is dropped to the monitor, the squeezed FH stays.
    const FilterAction f2 = filter_cascade(n.post_opa_filter);
    r.sh_monitor_W = sh_at_opa_W * (1.0 - f2.fh_leak_fraction);
    r.dissipated_W += sh_at_opa_W * f2.fh_leak_fraction;  // residual SH, discarded

    // Segment losses to the signal interferometer.
    const double t_sq = db_to_transmission(n.squeezer_path_loss_dB);
    r.state = apply_loss(r.state, 0, t_sq);
    r.dissipated_W += leak_W * (1.0 - t_sq);
    leak_W *= t_sq;
    r.p_leak_W = leak_W;

    const double t_lo = db_to_transmission(n.lo_path_loss_dB);
    r.p_lo_at_bhd_W = r.p_lo_W * t_lo;
    r.dissipated_W += r.p_lo_W * (1.0 - t_lo);
    r.state = apply_phase_rotation(r.state, 1, r.phi_lo);

    r.eps = r.p_lo_at_bhd_W > 0.0 ? r.p_leak_W / r.p_lo_at_bhd_W : 0.0;
    r.onchip_squeeze_ratio = r.state.var_x(0) / kVacuumVar;
    return r;
}

std::pair<double, double> monitor_readout(const PropagationResult& result) {
    return {result.fh_monitor_W, result.sh_monitor_W};
}

}  // namespace sqzsim
