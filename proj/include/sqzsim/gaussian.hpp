#pragma once

#include <Eigen/Dense>
#include <cstddef>

namespace sqzsim {

// Vacuum variance per quadrature, fixed by X = (A + A*)/2, Y = i(A - A*)/2.
inline constexpr double kVacuumVar = 0.25;

// Quadrature-space Gaussian state. Ordering is (X1, Y1, X2, Y2, ...).
struct GaussianState {
    std::size_t n_modes = 0;
    Eigen::VectorXd mean;   // length 2*n_modes
    Eigen::MatrixXd cov;    // 2n x 2n, symmetric

    std::size_t dim() const { return 2 * n_modes; }

    double var_x(std::size_t mode) const { return cov(2 * mode, 2 * mode); }
    double var_y(std::size_t mode) const { return cov(2 * mode + 1, 2 * mode + 1); }
};

// Linear Gaussian map: state' has mean S*mean + d, cov S*cov*S^T.
struct SymplecticOp {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd displacement;
};

// Symplectic form for n modes in (X1,Y1,...) ordering.
Eigen::MatrixXd symplectic_form(std::size_t n_modes);

// max |S^T Omega S - Omega|
double symplectic_defect(const Eigen::MatrixXd& s);

// Williamson invariants of cov, ascending. Physical states have all >= 1/4.
Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& cov);

GaussianState vacuum_state(std::size_t n_modes);

GaussianState apply_symplectic(const GaussianState& state, const SymplecticOp& op);

// Single-mode squeezer: at theta=0, var(X) -> var(X) e^{-2r}, var(Y) -> var(Y) e^{+2r}.
GaussianState apply_squeezer(const GaussianState& state, std::size_t mode, double r,
                             double theta = 0.0);

// Two-mode mixer with the [[sin(phi/2), cos(phi/2)], [cos(phi/2), -sin(phi/2)]]
// convention applied blockwise to the (i, j) quadratures.
GaussianState apply_beam_splitter(const GaussianState& state, std::size_t mode_i,
                                  std::size_t mode_j, double phi);

GaussianState apply_phase_rotation(const GaussianState& state, std::size_t mode, double phi);

// Pure-loss channel with transmissivity zeta: cov -> zeta*cov + (1-zeta)*vac,
// mean -> sqrt(zeta)*mean on the given mode.
GaussianState apply_loss(const GaussianState& state, std::size_t mode, double zeta);

SymplecticOp squeezer_op(std::size_t n_modes, std::size_t mode, double r, double theta);
SymplecticOp beam_splitter_op(std::size_t n_modes, std::size_t mode_i, std::size_t mode_j,
                              double phi);
SymplecticOp phase_rotation_op(std::size_t n_modes, std::size_t mode, double phi);

}  // namespace sqzsim
