#include "sqzsim/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sqzsim/homodyne.hpp"
#include "sqzsim/nonlinear.hpp"
#include "sqzsim/parallel.hpp"

namespace sqzsim {

FitResult fit_linear(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n < 3 || ys.size() != n) throw std::invalid_argument("fit_linear: need >= 3 paired points");
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx <= 0.0) throw std::runtime_error("fit_linear: rank-deficient (constant x)");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (slope * xs[i] + intercept);
        sse += r * r;
    }
    const double mse = sse / static_cast<double>(n > 2 ? n - 2 : 1);
    FitResult out;
    out.params["slope"] = slope;
    out.params["intercept"] = intercept;
    out.params["r_squared"] = syy > 0.0 ? 1.0 - sse / syy : 1.0;
    out.sigma["slope"] = std::sqrt(mse / sxx);
    out.sigma["intercept"] = std::sqrt(mse * (1.0 / n + mx * mx / sxx));
    out.residual_mse = sse / static_cast<double>(n);
    out.covariance = Eigen::MatrixXd::Zero(2, 2);
    out.covariance(0, 0) = mse / sxx;
    out.covariance(1, 1) = mse * (1.0 / n + mx * mx / sxx);
    out.covariance(0, 1) = out.covariance(1, 0) = -mse * mx / sxx;
    return out;
}

LmOutcome levenberg_marquardt(const LmProblem& problem, Eigen::VectorXd initial,
                              const LmOptions& options) {
    const std::size_t n = problem.observed.size();
    const Eigen::Index p = initial.size();
    auto residuals = [&](const Eigen::VectorXd& q) {
        Eigen::VectorXd r(n);
        for (std::size_t i = 0; i < n; ++i) r(i) = problem.model(q, i) - problem.observed[i];
        return r;
    };
    auto jacobian = [&](const Eigen::VectorXd& q) {
        Eigen::MatrixXd j(n, p);
        if (problem.jacobian_row) {
            for (std::size_t i = 0; i < n; ++i) j.row(i) = problem.jacobian_row(q, i).transpose();
        } else {
            for (Eigen::Index k = 0; k < p; ++k) {
                const double step = 1e-6 * std::max(1.0, std::abs(q(k)));
                Eigen::VectorXd qp = q, qm = q;
                qp(k) += step;
                qm(k) -= step;
                for (std::size_t i = 0; i < n; ++i)
                    j(i, k) = (problem.model(qp, i) - problem.model(qm, i)) / (2.0 * step);
            }
        }
        return j;
    };

    Eigen::VectorXd q = std::move(initial);
    Eigen::VectorXd r = residuals(q);
    double cost = r.squaredNorm();
    double damping = options.initial_damping;
    double grad0 = -1.0;

    LmOutcome out;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        out.iterations = iter + 1;
        const Eigen::MatrixXd j = jacobian(q);
        const Eigen::VectorXd grad = j.transpose() * r;
        if (grad0 < 0.0) grad0 = grad.norm();
        if (grad.norm() <= options.gradient_tol_rel * std::max(grad0, 1e-300)) {
            out.converged = true;
            break;
        }
        const Eigen::MatrixXd jtj = j.transpose() * j;
        bool stepped = false;
        for (int tries = 0; tries < 40; ++tries) {
            Eigen::MatrixXd a = jtj;
            a.diagonal() += damping * jtj.diagonal().cwiseMax(1e-12);
            const Eigen::VectorXd dq = a.ldlt().solve(-grad);
            const Eigen::VectorXd q_new = q + dq;
            const Eigen::VectorXd r_new = residuals(q_new);
            const double cost_new = r_new.squaredNorm();
            if (cost_new < cost) {
                const double drop = cost - cost_new;
                q = q_new;
                r = r_new;
                cost = cost_new;
                damping = std::max(damping * 0.3, 1e-12);
                stepped = true;
                if (drop <= 1e-14 * std::max(cost, 1e-300)) out.converged = true;
                break;
            }
            damping *= 5.0;  // residual grew, damp harder
        }
        if (!stepped) {
            // No damping level improved the cost: the iterate is a local
            // minimum to machine precision.
            out.converged = true;
        }
        if (out.converged) break;
    }
    // Final convergence check in case the loop exhausted iterations right at
    // the solution.
    if (!out.converged) {
        const Eigen::VectorXd grad = jacobian(q).transpose() * r;
        out.converged = grad.norm() <= options.gradient_tol_rel * std::max(grad0, 1e-300);
    }

    out.params = q;
    out.residual_mse = cost / static_cast<double>(n);
    const Eigen::MatrixXd j = jacobian(q);
    const double dof = static_cast<double>(n > static_cast<std::size_t>(p) ? n - p : 1);
    const Eigen::MatrixXd jtj = j.transpose() * j;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(jtj);
    if (lu.isInvertible()) {
        out.covariance = lu.inverse() * (cost / dof);
    } else {
        out.covariance = Eigen::MatrixXd::Constant(p, p, std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

FitResult fit_cal_curve(const std::vector<double>& v_dc, const std::vector<double>& peak_W,
                        double v_pp, double p_lo_W, double responsivity, double impedance_ohm) {
    const std::size_t n = v_dc.size();
    if (n < 6 || peak_W.size() != n)
        throw std::invalid_argument("fit_cal_curve: need >= 6 paired points");

    const double c0 = 2.0 * responsivity * responsivity * p_lo_W * p_lo_W / impedance_ohm *
                      std::pow(M_PI / 2.0, 3) * v_pp;
    const double peak_max = *std::max_element(peak_W.begin(), peak_W.end());

    FitResult out;
    if (peak_max <= 0.0) {
        out.params["eps"] = 0.0;
        out.params["vpi"] = 0.0;
        out.degenerate = true;
        return out;
    }

    const auto [vmin_it, vmax_it] = std::minmax_element(v_dc.begin(), v_dc.end());
    const double span = *vmax_it - *vmin_it;
    if (span <= 0.0) throw std::invalid_argument("fit_cal_curve: degenerate voltage span");

    // Coarse period search: for each candidate Vpi the amplitude is linear,
    // so eps has a closed form; keep the smallest-Vpi SSE minimum.
    double best_vpi = span, best_eps = 0.0, best_sse = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 400; ++k) {
        const double vpi = span * (0.15 + 2.0 * k / 399.0);
        double gg = 0.0, gy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double s = std::sin(M_PI * v_dc[i] / vpi);
            const double g = c0 / vpi * s * s;
            gg += g * g;
            gy += g * peak_W[i];
        }
        if (gg <= 0.0) continue;
        const double eps = gy / gg;
        double sse = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double s = std::sin(M_PI * v_dc[i] / vpi);
            const double r = peak_W[i] - eps * c0 / vpi * s * s;
            sse += r * r;
        }
        if (sse < best_sse * (1.0 - 1e-9)) {
            best_sse = sse;
            best_vpi = vpi;
            best_eps = std::max(eps, 1e-6);
        }
    }

    LmProblem problem;
    problem.observed = peak_W;
    problem.model = [&](const Eigen::VectorXd& q, std::size_t i) {
        return cal_peak_power(v_dc[i], v_pp, q(0), q(1), p_lo_W, responsivity, impedance_ohm);
    };
    problem.jacobian_row = [&](const Eigen::VectorXd& q, std::size_t i) {
        const double eps = q(0), vpi = q(1);
        const double arg = M_PI * v_dc[i] / vpi;
        const double s = std::sin(arg);
        Eigen::VectorXd row(2);
        row(0) = c0 / vpi * s * s;
        row(1) = -eps * c0 / (vpi * vpi) * (s * s + arg * std::sin(2.0 * arg));
        return row;
    };
    Eigen::VectorXd init(2);
    init << best_eps, best_vpi;
    const LmOutcome lm = levenberg_marquardt(problem, init);
    if (!lm.converged)
        throw std::runtime_error("fit_cal_curve: nonlinear fit failed to converge (iterations=" +
                                 std::to_string(lm.iterations) + ")");

    out.params["eps"] = lm.params(0);
    out.params["vpi"] = std::abs(lm.params(1));
    out.sigma["eps"] = std::sqrt(std::max(lm.covariance(0, 0), 0.0));
    out.sigma["vpi"] = std::sqrt(std::max(lm.covariance(1, 1), 0.0));
    out.residual_mse = lm.residual_mse;
    out.covariance = lm.covariance;
    out.iterations = lm.iterations;
    return out;
}

FitResult fit_shg_efficiency(const std::vector<double>& p_fh_W, const std::vector<double>& p_sh_W,
                             double length_cm, bool full_model) {
    const std::size_t n = p_fh_W.size();
    if (n < 2 || p_sh_W.size() != n)
        throw std::invalid_argument("fit_shg_efficiency: need paired samples");
    for (std::size_t i = 0; i < n; ++i) {
        if (p_fh_W[i] < 0.0 || p_sh_W[i] < 0.0)
            throw std::invalid_argument("fit_shg_efficiency: negative powers");
    }

    FitResult out;
    const double sh_max = *std::max_element(p_sh_W.begin(), p_sh_W.end());
    if (sh_max <= 0.0) {
        out.params["eta_pct_per_Wcm2"] = 0.0;
        out.sigma["eta_pct_per_Wcm2"] = 0.0;
        out.degenerate = true;
        return out;
    }

    if (!full_model) {
        // Linear in eta: P_SH = eta L^2 P_FH^2.
        double gg = 0.0, gy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double g = length_cm * length_cm * p_fh_W[i] * p_fh_W[i];
            gg += g * g;
            gy += g * p_sh_W[i];
        }
        const double eta = gy / gg;
        double sse = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = p_sh_W[i] - eta * length_cm * length_cm * p_fh_W[i] * p_fh_W[i];
            sse += r * r;
        }
        const double mse = sse / static_cast<double>(n > 1 ? n - 1 : 1);
        out.params["eta_pct_per_Wcm2"] = eta_to_percent(eta);
        out.sigma["eta_pct_per_Wcm2"] = eta_to_percent(std::sqrt(mse / gg));
        out.residual_mse = sse / static_cast<double>(n);
        return out;
    }

    LmProblem problem;
    problem.observed = p_sh_W;
    problem.model = [&](const Eigen::VectorXd& q, std::size_t i) {
        return shg_power(p_fh_W[i], q(0), length_cm);
    };
    Eigen::VectorXd init(1);
    init << 1.0;
    const LmOutcome lm = levenberg_marquardt(problem, init);
    if (!lm.converged) throw std::runtime_error("fit_shg_efficiency: full model did not converge");
    out.params["eta_pct_per_Wcm2"] = eta_to_percent(lm.params(0));
    out.sigma["eta_pct_per_Wcm2"] = eta_to_percent(std::sqrt(std::max(lm.covariance(0, 0), 0.0)));
    out.residual_mse = lm.residual_mse;
    out.iterations = lm.iterations;
    return out;
}

double locked_noise_ratio(double eta, double eps, double zeta, double p_in_W, double length_cm,
                          double phi_lo) {
    const double s = squeezing_ratio(p_in_W, eta, length_cm);
    QuadVariances signal{zeta * s + (1.0 - zeta), zeta / s + (1.0 - zeta)};
    QuadVariances lo{1.0, 1.0};
    const double phi2 = lock_phase(eps, phi_lo);
    return bhd_noise(eps, phi2, phi_lo, signal, lo);
}

ModelBand noise_model_band(const NoiseBandParams& p, const std::vector<double>& phi_grid) {
    if (p.eta_sigma < 0.0 || p.phase_sigma < 0.0)
        throw std::invalid_argument("noise_model_band: uncertainties must be >= 0");
    ModelBand band;
    band.phi_lo = phi_grid;
    constexpr int kSamples = 5;
    struct Bounds {
        double lo;
        double hi;
    };
    auto bounds = parallel_map(phi_grid.size(), [&](std::size_t i) {
        Bounds b{std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity()};
        for (int a = 0; a < kSamples; ++a) {
            const double eta =
                p.eta + p.eta_sigma * (2.0 * a / (kSamples - 1.0) - 1.0);
            for (int c = 0; c < kSamples; ++c) {
                const double off = p.phase_sigma * (2.0 * c / (kSamples - 1.0) - 1.0);
                const double v = locked_noise_ratio(std::max(eta, 0.0), p.eps, p.zeta, p.p_in_W,
                                                    p.length_cm, phi_grid[i] + p.phase_offset + off);
                b.lo = std::min(b.lo, v);
                b.hi = std::max(b.hi, v);
            }
        }
        return b;
    });
    band.lower.resize(phi_grid.size());
    band.upper.resize(phi_grid.size());
    for (std::size_t i = 0; i < phi_grid.size(); ++i) {
        band.lower[i] = bounds[i].lo;
        band.upper[i] = bounds[i].hi;
    }
    return band;
}

}  // namespace sqzsim
