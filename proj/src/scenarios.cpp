#include "sqzsim/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sqzsim/io.hpp"
#include "sqzsim/netlist.hpp"
#include "sqzsim/nonlinear.hpp"
#include "sqzsim/parallel.hpp"

namespace sqzsim {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) throw std::invalid_argument("linspace: empty grid");
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

json fit_to_json(const FitResult& fit) {
    json j;
    for (const auto& [k, v] : fit.params) j["params"][k] = v;
    for (const auto& [k, v] : fit.sigma) j["sigma"][k] = v;
    j["residual_mse"] = fit.residual_mse;
    j["degenerate"] = fit.degenerate;
    return j;
}

void write_spectrum_csv(const RfSpectrum& spec, const std::string& path) {
    CsvWriter csv({"freq_Hz", "psd_dBm"});
    csv.add_header("rbw_Hz", spec.rbw_hz);
    csv.add_header("p_lo_mW", spec.p_lo_W * 1e3);
    for (std::size_t i = 0; i < spec.freqs_hz.size(); ++i)
        csv.add_row({spec.freqs_hz[i], watts_to_dbm(spec.psd_W[i])});
    csv.write(path);
}

struct Outputs {
    fs::path dir;
    std::vector<std::string> files;
    json summary;

    std::string path(const std::string& name) {
        files.push_back(name);
        return (dir / name).string();
    }
    void write_json(const std::string& name, const json& j) {
        std::ofstream out(path(name));
        out << j.dump(2) << "\n";
    }
};

// --- individual scenarios ---------------------------------------------------

void scenario_shg_efficiency(const Config& cfg, std::uint64_t seed, Outputs& out) {
    const PicNetlist pic = build_pic(cfg);
    const double p_min = cfg.get_double("scenario.shg.p_min_mW", 0.5) * 1e-3;
    const double p_max = cfg.get_double("scenario.shg.p_max_mW", 8.0) * 1e-3;
    const auto n = static_cast<std::size_t>(cfg.get_int("scenario.shg.points", 25));
    const double noise_frac = cfg.get_double("scenario.shg.noise_frac", 0.0);
    if (n == 0) throw ConfigError("scenario.shg.points", "sweep grid must be nonempty");

    const std::vector<double> p_fh = linspace(p_min, p_max, n);
    auto p_sh = parallel_map(n, [&](std::size_t i) {
        const TwmFields f = integrate_twm(std::sqrt(p_fh[i]), 0.0,
                                          {pic.eta, pic.shg_length_cm, 0.0, p_fh[i]}, 1024);
        return std::norm(f.sh);
    });
    if (noise_frac > 0.0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, noise_frac);
        for (double& v : p_sh) v *= std::max(0.0, 1.0 + gauss(rng));
    }

    CsvWriter csv({"p_fh_mW", "p_sh_mW"});
    csv.add_header("length_cm", pic.shg_length_cm);
    for (std::size_t i = 0; i < n; ++i) csv.add_row({p_fh[i] * 1e3, p_sh[i] * 1e3});
    csv.write(out.path("shg_efficiency.csv"));

    const FitResult quad = fit_shg_efficiency(p_fh, p_sh, pic.shg_length_cm, false);
    const FitResult full = fit_shg_efficiency(p_fh, p_sh, pic.shg_length_cm, true);
    json j;
    j["quadratic_fit"] = fit_to_json(quad);
    j["tanh2_fit"] = fit_to_json(full);
    out.write_json("shg_efficiency_fit.json", j);
    out.summary["eta_pct_per_Wcm2"] = full.params.at("eta_pct_per_Wcm2");

    std::vector<double> p_fh_mW(n), p_sh_mW(n);
    for (std::size_t i = 0; i < n; ++i) {
        p_fh_mW[i] = p_fh[i] * 1e3;
        p_sh_mW[i] = p_sh[i] * 1e3;
    }
    write_svg_plot(out.path("shg_efficiency.svg"), "SH power vs FH pump power", "P_FH (mW)",
                   "P_SH (mW)", {{"data", "#1f77b4", p_fh_mW, p_sh_mW}});
}

void scenario_qpm_curve(const Config& cfg, std::uint64_t seed, Outputs& out) {
    const double period_um = cfg.get_double("qpm.period_um", 3.7);
    const double length_cm = cfg.get_double("qpm.length_cm", 0.81);
    const double span_nm = cfg.get_double("scenario.qpm.span_nm", 4.0);
    const auto n = static_cast<std::size_t>(cfg.get_int("scenario.qpm.points", 801));
    const double sigma = cfg.get_double("scenario.qpm.phase_sigma_rad_per_sqrt_cm", 4.6);
    const double lambda0 = cfg.get_double("laser.wavelength_nm", 1544.0);
    if (n == 0) throw ConfigError("scenario.qpm.points", "sweep grid must be nonempty");

    DispersionTable dispersion = [&] {
        if (cfg.has("qpm.dispersion_file"))
            return DispersionTable::load(cfg.get_string("qpm.dispersion_file"));
        const double dk0 = 2.0 * M_PI / (period_um * 1e-4);
        const double slope = cfg.get_double("qpm.dk_slope_rad_per_cm_nm", 15.5);
        return DispersionTable::linear(lambda0, dk0, slope, span_nm * 1.2, 4001);
    }();

    const std::vector<double> lambdas = linspace(lambda0 - span_nm / 2, lambda0 + span_nm / 2, n);
    PolingProfile ideal{period_um, length_cm, {}};
    const PolingProfile noisy = make_noisy_profile(period_um, length_cm, sigma, 4096, seed);
    const std::vector<double> t_ideal = qpm_transfer(ideal, dispersion, lambdas);
    const std::vector<double> t_noisy = qpm_transfer(noisy, dispersion, lambdas);

    CsvWriter csv({"lambda_nm", "transfer_ideal", "transfer_distorted"});
    csv.add_header("period_um", period_um);
    csv.add_header("length_cm", length_cm);
    csv.add_header("phase_sigma", sigma);
    for (std::size_t i = 0; i < n; ++i) csv.add_row({lambdas[i], t_ideal[i], t_noisy[i]});
    csv.write(out.path("qpm_curve.csv"));

    const double peak_ideal = *std::max_element(t_ideal.begin(), t_ideal.end());
    const double peak_noisy = *std::max_element(t_noisy.begin(), t_noisy.end());
    out.summary["peak_ideal"] = peak_ideal;
    out.summary["peak_distorted"] = peak_noisy;
    out.summary["peak_ratio"] = peak_noisy / peak_ideal;

    write_svg_plot(out.path("qpm_curve.svg"), "QPM transfer function", "wavelength (nm)",
                   "normalized efficiency",
                   {{"ideal", "#1f77b4", lambdas, t_ideal},
                    {"distorted", "#ff7f0e", lambdas, t_noisy}});
}

void scenario_shot_noise_sweep(const Config& cfg, std::uint64_t, Outputs& out) {
    const BhdConfig bhd = bhd_from_config(cfg);
    const double p_max = cfg.get_double("scenario.shot_noise.p_max_mW", 8.8) * 1e-3;
    const auto n = static_cast<std::size_t>(cfg.get_int("scenario.shot_noise.points", 8));
    const double f_min = cfg.get_double("scenario.spectrum.f_min_MHz", 50.0) * 1e6;
    const double f_max = cfg.get_double("scenario.spectrum.f_max_MHz", 80.0) * 1e6;
    if (n == 0) throw ConfigError("scenario.shot_noise.points", "sweep grid must be nonempty");

    const std::vector<double> p_lo = linspace(0.0, p_max, n);
    std::vector<double> integrated(n);
    CsvWriter csv({"p_lo_mW", "integrated_noise_W", "floor_dBm_per_bin"});
    csv.add_header("rbw_Hz", bhd.rbw_hz);
    for (std::size_t i = 0; i < n; ++i) {
        const RfSpectrum spec = synth_spectrum(1.0, p_lo[i], {}, bhd, f_min, f_max);
        double total = 0.0;
        for (double v : spec.psd_W) total += v;
        integrated[i] = total;
        csv.add_row({p_lo[i] * 1e3, total, watts_to_dbm(spec.psd_W.front())});
    }
    csv.write(out.path("shot_noise_sweep.csv"));

    const FitResult fit = fit_linear(p_lo, integrated);
    out.write_json("shot_noise_fit.json", fit_to_json(fit));
    out.summary["r_squared"] = fit.params.at("r_squared");

    const double shot_78 = shot_floor_bin_power(bhd, 7.8e-3);
    const double elec = bhd.electronic_floor_W_per_Hz * bhd.rbw_hz;
    out.summary["shot_vs_electronic_dB_at_7p8mW"] =
        elec > 0.0 ? 10.0 * std::log10(shot_78 / elec) : std::nan("");

    std::vector<double> p_mW(n);
    for (std::size_t i = 0; i < n; ++i) p_mW[i] = p_lo[i] * 1e3;
    write_svg_plot(out.path("shot_noise_sweep.svg"), "Integrated noise vs LO power", "P_LO (mW)",
                   "integrated noise (W)", {{"data", "#1f77b4", p_mW, integrated}});
}

void scenario_lo_calibration(const Config& cfg, std::uint64_t seed, Outputs& out) {
    const BhdConfig bhd = bhd_from_config(cfg);
    const double eps = cfg.get_double("scenario.cal.eps", 0.04);
    const double vpi = cfg.get_double("lo.vpi_V", 28.6);
    const double v_pp = cfg.get_double("scenario.cal.v_pp_V", 1.0);
    const double p_lo = cfg.get_double("scenario.cal.p_lo_mW", 7.8) * 1e-3;
    const double v_max = cfg.get_double("scenario.cal.v_max_V", 56.0);
    const auto n = static_cast<std::size_t>(cfg.get_int("scenario.cal.points", 25));
    const double noise_frac = cfg.get_double("scenario.cal.noise_frac", 0.05);
    if (n == 0) throw ConfigError("scenario.cal.points", "sweep grid must be nonempty");

    const std::vector<double> v_dc = linspace(0.0, v_max, n);
    std::vector<double> peaks(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, noise_frac);
    for (std::size_t i = 0; i < n; ++i) {
        peaks[i] = cal_peak_power(v_dc[i], v_pp, eps, vpi, p_lo, bhd.responsivity_A_per_W,
                                  bhd.impedance_ohm);
        if (noise_frac > 0.0) peaks[i] *= std::max(0.0, 1.0 + gauss(rng));
    }

    CsvWriter csv({"v_dc_V", "peak_power_W"});
    csv.add_header("v_pp_V", v_pp);
    csv.add_header("p_lo_mW", p_lo * 1e3);
    for (std::size_t i = 0; i < n; ++i) csv.add_row({v_dc[i], peaks[i]});
    csv.write(out.path("lo_calibration.csv"));

    FitResult fit;
    try {
        fit = fit_cal_curve(v_dc, peaks, v_pp, p_lo, bhd.responsivity_A_per_W, bhd.impedance_ohm);
    } catch (const std::runtime_error& e) {
        throw NumericalError(e.what());
    }
    out.write_json("lo_calibration_fit.json", fit_to_json(fit));
    out.summary["eps"] = fit.params.at("eps");
    out.summary["vpi_V"] = fit.params.at("vpi");

    write_svg_plot(out.path("lo_calibration.svg"), "LO calibration peak vs DC bias", "V_DC (V)",
                   "peak power (W)", {{"data", "#1f77b4", v_dc, peaks}});
}

void scenario_lo_phase_sweep(const Config& cfg, std::uint64_t, Outputs& out) {
    const PicNetlist pic = build_pic(cfg);
    const double p_offchip = cfg.get_double("laser.power_offchip_mW", 125.0) * 1e-3;
    const PropagationResult prop = propagate(pic, p_offchip);

    const double zeta = cfg.get_double("detection.efficiency", 0.20);
    const double eps = cfg.get_double("scenario.lo_phase.eps", prop.eps);
    const auto n = static_cast<std::size_t>(cfg.get_int("scenario.lo_phase.points", 181));
    if (n == 0) throw ConfigError("scenario.lo_phase.points", "sweep grid must be nonempty");

    NoiseBandParams band_params;
    band_params.eta = pic.eta;
    band_params.eta_sigma =
        eta_from_percent(cfg.get_double("scenario.lo_phase.eta_sigma_pct_per_Wcm2", 100.0));
    band_params.phase_offset = 0.0;
    band_params.phase_sigma = cfg.get_double("scenario.lo_phase.phase_sigma_rad", 0.05);
    band_params.eps = eps;
    band_params.zeta = zeta;
    band_params.p_in_W = prop.p_squeezer_in_W;
    band_params.length_cm = pic.opa_length_cm;

    const std::vector<double> phis = linspace(0.0, 2.0 * M_PI, n);
    const auto ratios = parallel_map(n, [&](std::size_t i) {
        return locked_noise_ratio(pic.eta, eps, zeta, prop.p_squeezer_in_W, pic.opa_length_cm,
                                  phis[i]);
    });
    const ModelBand band = noise_model_band(band_params, phis);

    CsvWriter csv({"phi_lo_rad", "noise_ratio", "band_lower", "band_upper"});
    csv.add_header("eps", eps);
    csv.add_header("zeta", zeta);
    csv.add_header("p_pump_mW", prop.p_squeezer_in_W * 1e3);
    for (std::size_t i = 0; i < n; ++i)
        csv.add_row({phis[i], ratios[i], band.lower[i], band.upper[i]});
    csv.write(out.path("lo_phase_sweep.csv"));

    out.summary["min_noise_ratio"] = *std::min_element(ratios.begin(), ratios.end());
    out.summary["max_noise_ratio"] = *std::max_element(ratios.begin(), ratios.end());
    out.summary["eps"] = eps;

    write_svg_plot(out.path("lo_phase_sweep.svg"), "Noise vs LO phase", "phi_LO (rad)",
                   "noise / shot noise",
                   {{"model", "#1f77b4", phis, ratios},
                    {"band lower", "#2ca02c", phis, band.lower},
                    {"band upper", "#2ca02c", phis, band.upper}});
}

void scenario_quantum_enhanced_snr(const Config& cfg, std::uint64_t, Outputs& out) {
    const BhdConfig bhd = bhd_from_config(cfg);
    const double p_lo = cfg.get_double("scenario.snr.p_lo_mW", 7.8) * 1e-3;
    const double floor_ratio = cfg.get_double("scenario.snr.floor_ratio", 0.96);
    const double tone_freq = cfg.get_double("scenario.snr.tone_MHz", 60.0) * 1e6;
    const double tone_dBm = cfg.get_double("scenario.snr.tone_dBm", -35.0);
    const double f_min = cfg.get_double("scenario.spectrum.f_min_MHz", 50.0) * 1e6;
    const double f_max = cfg.get_double("scenario.spectrum.f_max_MHz", 80.0) * 1e6;

    const std::vector<Tone> tones{{tone_freq, dbm_to_watts(tone_dBm)}};
    const RfSpectrum ref = synth_spectrum(1.0, p_lo, tones, bhd, f_min, f_max);
    const RfSpectrum sq = synth_spectrum(floor_ratio, p_lo, tones, bhd, f_min, f_max);

    write_spectrum_csv(ref, out.path("spectrum_shot_limited.csv"));
    write_spectrum_csv(sq, out.path("spectrum_squeezed.csv"));

    // Electronic-floor-subtracted spectra give the optical SNR comparison;
    // the raw figure is reported alongside.
    const double elec = bhd.electronic_floor_W_per_Hz * bhd.rbw_hz;
    auto subtract = [&](RfSpectrum s) {
        for (double& v : s.psd_W) v = std::max(v - elec, 1e-30);
        return s;
    };
    const double improvement_raw = snr_improvement(sq, ref, tone_freq);
    const double improvement = snr_improvement(subtract(sq), subtract(ref), tone_freq);

    json j;
    j["snr_improvement"] = improvement;
    j["snr_improvement_raw"] = improvement_raw;
    j["floor_ratio"] = floor_ratio;
    j["tone_MHz"] = tone_freq / 1e6;
    out.write_json("snr_improvement.json", j);
    out.summary["snr_improvement"] = improvement;

    std::vector<double> f_mhz(ref.freqs_hz.size()), ref_dbm(ref.psd_W.size()),
        sq_dbm(sq.psd_W.size());
    for (std::size_t i = 0; i < ref.freqs_hz.size(); ++i) {
        f_mhz[i] = ref.freqs_hz[i] / 1e6;
        ref_dbm[i] = watts_to_dbm(ref.psd_W[i]);
        sq_dbm[i] = watts_to_dbm(sq.psd_W[i]);
    }
    write_svg_plot(out.path("quantum_enhanced_snr.svg"), "Quantum-enhanced tone measurement",
                   "frequency (MHz)", "PSD (dBm)",
                   {{"shot-limited", "#000000", f_mhz, ref_dbm},
                    {"squeezed", "#ff7f0e", f_mhz, sq_dbm}});
}

void scenario_loss_projection(const Config& cfg, std::uint64_t, Outputs& out) {
    const PicNetlist pic = build_pic(cfg);
    const double p_max = cfg.get_double("scenario.loss.p_max_mW", 96.0) * 1e-3;
    const auto n = static_cast<std::size_t>(cfg.get_int("scenario.loss.points", 100));
    const double det_loss_dB = cfg.get_double("scenario.loss.detection_loss_dB", 0.8);
    const double zeta_now = cfg.get_double("detection.efficiency", 0.20);
    if (n == 0) throw ConfigError("scenario.loss.points", "sweep grid must be nonempty");

    const double zeta_proj = std::pow(10.0, -det_loss_dB / 10.0);
    const std::vector<double> p_in = linspace(p_max / n, p_max, n);
    const auto rows = parallel_map(n, [&](std::size_t i) {
        const double on_chip = squeezing_ratio(p_in[i], pic.eta, pic.opa_length_cm);
        const double projected = zeta_proj * on_chip + (1.0 - zeta_proj);
        const double current = zeta_now * on_chip + (1.0 - zeta_now);
        return std::array<double, 3>{on_chip, projected, current};
    });

    CsvWriter csv({"p_in_mW", "onchip_dB", "projected_dB", "current_dB", "projected_factor"});
    csv.add_header("detection_loss_dB", det_loss_dB);
    for (std::size_t i = 0; i < n; ++i) {
        csv.add_row({p_in[i] * 1e3, -ratio_to_db(rows[i][0]), -ratio_to_db(rows[i][1]),
                     -ratio_to_db(rows[i][2]), 1.0 / rows[i][1]});
    }
    csv.write(out.path("loss_projection.csv"));

    out.summary["max_projected_squeezing_dB"] = -ratio_to_db(rows.back()[1]);
    out.summary["max_projected_factor"] = 1.0 / rows.back()[1];

    std::vector<double> p_mW(n), proj(n), cur(n);
    for (std::size_t i = 0; i < n; ++i) {
        p_mW[i] = p_in[i] * 1e3;
        proj[i] = -ratio_to_db(rows[i][1]);
        cur[i] = -ratio_to_db(rows[i][2]);
    }
    write_svg_plot(out.path("loss_projection.svg"), "Projected squeezing vs on-chip power",
                   "P_in (mW)", "observed squeezing (dB)",
                   {{"reduced loss", "#1f77b4", p_mW, proj},
                    {"current system", "#ff7f0e", p_mW, cur}});
}

}  // namespace

BhdConfig bhd_from_config(const Config& cfg) {
    BhdConfig bhd;
    bhd.responsivity_A_per_W = cfg.get_double("detection.responsivity_A_per_W", 1.0);
    bhd.conversion_gain_V_per_W = cfg.get_double("detection.conversion_gain_V_per_W", 1.25e5);
    bhd.impedance_ohm = cfg.get_double("detection.impedance_ohm", 50.0);
    bhd.quantum_efficiency = cfg.get_double("detection.quantum_efficiency", 1.0);
    bhd.electronic_floor_W_per_Hz = cfg.get_double("detection.electronic_floor_W_per_Hz", 0.0);
    bhd.rbw_hz = cfg.get_double("detection.rbw_kHz", 60.0) * 1e3;
    bhd.wavelength_nm = cfg.get_double("laser.wavelength_nm", 1544.0);
    if (bhd.rbw_hz <= 0.0) throw ConfigError("detection.rbw_kHz", "must be > 0");
    if (bhd.impedance_ohm <= 0.0) throw ConfigError("detection.impedance_ohm", "must be > 0");
    return bhd;
}

std::vector<std::string> scenario_names() {
    return {"shg-efficiency",      "qpm-curve",    "shot-noise-sweep", "lo-calibration",
            "lo-phase-sweep",      "quantum-enhanced-snr", "loss-projection"};
}

ScenarioResult run_scenario(const Config& config, const std::string& name,
                            const std::string& out_dir, std::uint64_t seed) {
    Outputs out;
    out.dir = out_dir;
    fs::create_directories(out.dir);

    if (name == "shg-efficiency")
        scenario_shg_efficiency(config, seed, out);
    else if (name == "qpm-curve")
        scenario_qpm_curve(config, seed, out);
    else if (name == "shot-noise-sweep")
        scenario_shot_noise_sweep(config, seed, out);
    else if (name == "lo-calibration")
        scenario_lo_calibration(config, seed, out);
    else if (name == "lo-phase-sweep")
        scenario_lo_phase_sweep(config, seed, out);
    else if (name == "quantum-enhanced-snr")
        scenario_quantum_enhanced_snr(config, seed, out);
    else if (name == "loss-projection")
        scenario_loss_projection(config, seed, out);
    else
        throw UnknownScenario(name);

    json manifest;
    manifest["schema_version"] = 1;
    manifest["scenario"] = name;
    manifest["seed"] = seed;
    json params = json::object();
    for (const auto& [k, v] : config.entries()) params[k] = v;
    manifest["parameters"] = params;
    manifest["summary"] = out.summary;
    out.files.push_back("manifest.json");
    manifest["files"] = out.files;
    {
        std::ofstream mf(out.dir / "manifest.json");
        mf << manifest.dump(2) << "\n";
    }
    ScenarioResult result;
    result.files = out.files;
    return result;
}

ValidationReport validate_config(const std::string& path) {
    ValidationReport report;
    const Config cfg = Config::parse_file(path);

    // Resolve everything the scenarios would read so defaults get echoed and
    // unknown keys surface as warnings.
    std::ostringstream text;
    const PicNetlist pic = build_pic(cfg);
    const BhdConfig bhd = bhd_from_config(cfg);
    text << "resolved parameters (defaults applied):\n" << pic.to_text();
    text << "detection.efficiency = " << cfg.get_double("detection.efficiency", 0.20) << "\n";
    text << "detection.responsivity_A_per_W = " << bhd.responsivity_A_per_W << "\n";
    text << "detection.conversion_gain_V_per_W = " << bhd.conversion_gain_V_per_W << "\n";
    text << "detection.impedance_ohm = " << bhd.impedance_ohm << "\n";
    text << "detection.electronic_floor_W_per_Hz = " << bhd.electronic_floor_W_per_Hz << "\n";
    text << "detection.rbw_kHz = " << bhd.rbw_hz / 1e3 << "\n";
    text << "laser.power_offchip_mW = " << cfg.get_double("laser.power_offchip_mW", 125.0) << "\n";
    // Touch scenario keys so they are not reported unknown.
    for (const std::string key :
         {"scenario.shg.p_min_mW", "scenario.shg.p_max_mW", "scenario.shg.points",
          "scenario.shg.noise_frac", "scenario.qpm.span_nm", "scenario.qpm.points",
          "scenario.qpm.phase_sigma_rad_per_sqrt_cm", "qpm.period_um", "qpm.length_cm",
          "qpm.dk_slope_rad_per_cm_nm", "qpm.dispersion_file", "scenario.shot_noise.p_max_mW",
          "scenario.shot_noise.points", "scenario.spectrum.f_min_MHz",
          "scenario.spectrum.f_max_MHz", "scenario.cal.eps", "scenario.cal.v_pp_V",
          "scenario.cal.p_lo_mW", "scenario.cal.v_max_V", "scenario.cal.points",
          "scenario.cal.noise_frac", "scenario.lo_phase.eps", "scenario.lo_phase.points",
          "scenario.lo_phase.eta_sigma_pct_per_Wcm2", "scenario.lo_phase.phase_sigma_rad",
          "scenario.snr.p_lo_mW", "scenario.snr.floor_ratio", "scenario.snr.tone_MHz",
          "scenario.snr.tone_dBm", "scenario.loss.p_max_mW", "scenario.loss.points",
          "scenario.loss.detection_loss_dB", "detection.quantum_efficiency"}) {
        if (cfg.has(key)) cfg.get_string(key);
    }
    for (const std::string& key : cfg.unknown_keys())
        report.warnings.push_back("unknown key: " + key);
    report.text = text.str();
    report.ok = true;
    return report;
}

}  // namespace sqzsim
