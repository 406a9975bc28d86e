#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sqzsim {

struct FitResult {
    std::map<std::string, double> params;
    std::map<std::string, double> sigma;
    double residual_mse = 0.0;
    Eigen::MatrixXd covariance;
    bool degenerate = false;
    int iterations = 0;
};

// Ordinary least squares y = slope*x + intercept with MSE-derived sigmas.
FitResult fit_linear(const std::vector<double>& xs, const std::vector<double>& ys);

// Damped Gauss-Newton (Levenberg-Marquardt style) on a generic residual
// model. `model(params, i)` returns the model value for sample i; the
// Jacobian is finite-difference unless an analytic one is supplied.
struct LmOptions {
    int max_iterations = 200;
    double gradient_tol_rel = 1e-9;
    double initial_damping = 1e-3;
};

struct LmProblem {
    std::function<double(const Eigen::VectorXd&, std::size_t)> model;
    // Optional analytic Jacobian row for sample i; empty -> finite differences.
    std::function<Eigen::VectorXd(const Eigen::VectorXd&, std::size_t)> jacobian_row;
    std::vector<double> observed;
};

struct LmOutcome {
    Eigen::VectorXd params;
    Eigen::MatrixXd covariance;
    double residual_mse = 0.0;
    bool converged = false;
    int iterations = 0;
};

LmOutcome levenberg_marquardt(const LmProblem& problem, Eigen::VectorXd initial,
                              const LmOptions& options = {});

// Fit the RF calibration model P(Vdc) = (2 eps R^2 P_LO^2/Z)(pi/2)^3 (Vpp/Vpi)
// sin^2(pi Vdc/Vpi) for (eps, Vpi). Analytic Jacobian; Vpi is initialized
// from the dominant sin^2 period and fixed to the smallest positive branch.
FitResult fit_cal_curve(const std::vector<double>& v_dc, const std::vector<double>& peak_W,
                        double v_pp, double p_lo_W, double responsivity, double impedance_ohm);

// Fit the normalized SHG efficiency from a power sweep. Low-conversion model
// P_SH = eta L^2 P_FH^2 by default; full_model uses P_in tanh^2(L sqrt(eta P)).
// Returned eta is in %/(W cm^2).
FitResult fit_shg_efficiency(const std::vector<double>& p_fh_W, const std::vector<double>& p_sh_W,
                             double length_cm, bool full_model = false);

// Envelope of the locked-BHD noise model over the (eta, phase-offset)
// uncertainty box, evaluated on a phi_LO grid.
struct ModelBand {
    std::vector<double> phi_lo;
    std::vector<double> lower;
    std::vector<double> upper;
};

struct NoiseBandParams {
    double eta = 0.0;        // W^-1 cm^-2
    double eta_sigma = 0.0;
    double phase_offset = 0.0;
    double phase_sigma = 0.0;
    double eps = 0.0;
    double zeta = 1.0;
    double p_in_W = 0.0;
    double length_cm = 0.0;
};

ModelBand noise_model_band(const NoiseBandParams& params, const std::vector<double>& phi_grid);

// Locked BHD noise ratio at one phi_LO given on-chip pump parameters; the
// single-curve building block of noise_model_band.
double locked_noise_ratio(double eta, double eps, double zeta, double p_in_W, double length_cm,
                          double phi_lo);

}  // namespace sqzsim
