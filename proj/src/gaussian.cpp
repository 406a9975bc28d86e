#include "sqzsim/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sqzsim {

Eigen::MatrixXd symplectic_form(std::size_t n_modes) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (std::size_t m = 0; m < n_modes; ++m) {
        omega(2 * m, 2 * m + 1) = 1.0;
        omega(2 * m + 1, 2 * m) = -1.0;
    }
    return omega;
}

double symplectic_defect(const Eigen::MatrixXd& s) {
    const std::size_t n = static_cast<std::size_t>(s.rows()) / 2;
    Eigen::MatrixXd omega = symplectic_form(n);
    return (s.transpose() * omega * s - omega).cwiseAbs().maxCoeff();
}

Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& cov) {
    const std::size_t n = static_cast<std::size_t>(cov.rows()) / 2;
    Eigen::MatrixXd m = symplectic_form(n) * cov;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    // Eigenvalues of Omega*cov come in +/- i*nu pairs; collect |nu| once per pair.
    std::vector<double> nus;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const auto ev = solver.eigenvalues()[k];
        if (ev.imag() > 0.0) nus.push_back(std::abs(ev));
    }
    std::sort(nus.begin(), nus.end());
    return Eigen::Map<Eigen::VectorXd>(nus.data(), static_cast<Eigen::Index>(nus.size()));
}

GaussianState vacuum_state(std::size_t n_modes) {
    if (n_modes == 0) throw std::invalid_argument("vacuum_state: n_modes must be >= 1");
    GaussianState st;
    st.n_modes = n_modes;
    st.mean = Eigen::VectorXd::Zero(2 * n_modes);
    st.cov = kVacuumVar * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    return st;
}

GaussianState apply_symplectic(const GaussianState& state, const SymplecticOp& op) {
    GaussianState out;
    out.n_modes = state.n_modes;
    out.mean = op.matrix * state.mean + op.displacement;
    out.cov = op.matrix * state.cov * op.matrix.transpose();
    return out;
}

namespace {

SymplecticOp identity_op(std::size_t n_modes) {
    SymplecticOp op;
    op.matrix = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    op.displacement = Eigen::VectorXd::Zero(2 * n_modes);
    return op;
}

// 2x2 rotation acting on a single mode's (X, Y) block.
Eigen::Matrix2d rot2(double phi) {
    Eigen::Matrix2d r;
    r << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
    return r;
}

}  // namespace

SymplecticOp squeezer_op(std::size_t n_modes, std::size_t mode, double r, double theta) {
    SymplecticOp op = identity_op(n_modes);
    Eigen::Matrix2d sq;
    sq << std::exp(-r), 0.0, 0.0, std::exp(r);
    Eigen::Matrix2d block = rot2(theta) * sq * rot2(-theta);
    op.matrix.block<2, 2>(2 * mode, 2 * mode) = block;
    return op;
}

SymplecticOp beam_splitter_op(std::size_t n_modes, std::size_t mode_i, std::size_t mode_j,
                              double phi) {
    SymplecticOp op = identity_op(n_modes);
    const double s = std::sin(phi / 2.0);
    const double c = std::cos(phi / 2.0);
    const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
    op.matrix.block<2, 2>(2 * mode_i, 2 * mode_i) = s * id;
    op.matrix.block<2, 2>(2 * mode_i, 2 * mode_j) = c * id;
    op.matrix.block<2, 2>(2 * mode_j, 2 * mode_i) = c * id;
    op.matrix.block<2, 2>(2 * mode_j, 2 * mode_j) = -s * id;
    return op;
}

SymplecticOp phase_rotation_op(std::size_t n_modes, std::size_t mode, double phi) {
    SymplecticOp op = identity_op(n_modes);
    op.matrix.block<2, 2>(2 * mode, 2 * mode) = rot2(phi);
    return op;
}

GaussianState apply_squeezer(const GaussianState& state, std::size_t mode, double r,
                             double theta) {
    if (mode >= state.n_modes) throw std::invalid_argument("apply_squeezer: mode out of range");
    if (r < 0.0) throw std::invalid_argument("apply_squeezer: r must be >= 0");
    return apply_symplectic(state, squeezer_op(state.n_modes, mode, r, theta));
}

GaussianState apply_beam_splitter(const GaussianState& state, std::size_t mode_i,
                                  std::size_t mode_j, double phi) {
    if (mode_i == mode_j) throw std::invalid_argument("apply_beam_splitter: modes must differ");
    if (mode_i >= state.n_modes || mode_j >= state.n_modes)
        throw std::invalid_argument("apply_beam_splitter: mode out of range");
    return apply_symplectic(state, beam_splitter_op(state.n_modes, mode_i, mode_j, phi));
}

GaussianState apply_phase_rotation(const GaussianState& state, std::size_t mode, double phi) {
    if (mode >= state.n_modes)
        throw std::invalid_argument("apply_phase_rotation: mode out of range");
    return apply_symplectic(state, phase_rotation_op(state.n_modes, mode, phi));
}

GaussianState apply_loss(const GaussianState& state, std::size_t mode, double zeta) {
    if (mode >= state.n_modes) throw std::invalid_argument("apply_loss: mode out of range");
    if (zeta < 0.0 || zeta > 1.0)
        throw std::invalid_argument("apply_loss: transmissivity must be in [0, 1]");
    GaussianState out = state;
    const double sz = std::sqrt(zeta);
    out.mean.segment<2>(2 * mode) *= sz;
    // Mix with vacuum on this mode: the mode block gets zeta*cov + (1-zeta)*vac,
    // cross blocks with other modes scale by sqrt(zeta).
    for (std::size_t m = 0; m < state.n_modes; ++m) {
        if (m == mode) continue;
        out.cov.block<2, 2>(2 * mode, 2 * m) *= sz;
        out.cov.block<2, 2>(2 * m, 2 * mode) *= sz;
    }
    out.cov.block<2, 2>(2 * mode, 2 * mode) =
        zeta * state.cov.block<2, 2>(2 * mode, 2 * mode) +
        (1.0 - zeta) * kVacuumVar * Eigen::Matrix2d::Identity();
    return out;
}

}  // namespace sqzsim
