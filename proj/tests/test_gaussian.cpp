#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sqzsim/gaussian.hpp"

using namespace sqzsim;

TEST_CASE("vacuum state") {
    const GaussianState v1 = vacuum_state(1);
    CHECK(v1.mean.norm() == 0.0);
    CHECK(v1.cov(0, 0) == doctest::Approx(0.25));
    CHECK(v1.cov(1, 1) == doctest::Approx(0.25));
    CHECK(v1.cov(0, 1) == 0.0);

    const GaussianState v2 = vacuum_state(2);
    CHECK(v2.cov.rows() == 4);
    CHECK((v2.cov - 0.25 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::VectorXd nus = symplectic_eigenvalues(v2.cov);
    for (Eigen::Index i = 0; i < nus.size(); ++i) CHECK(nus(i) == doctest::Approx(0.25));

    CHECK_THROWS_AS(vacuum_state(0), std::invalid_argument);
}

TEST_CASE("squeezer") {
    const GaussianState vac = vacuum_state(1);

    SUBCASE("r = 0 is the identity") {
        const GaussianState out = apply_squeezer(vac, 0, 0.0);
        CHECK((out.cov - vac.cov).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    }

    SUBCASE("nominal operating point") {
        // r = L sqrt(eta P) tanh(L sqrt(eta P)) with eta=10 1/(W cm^2),
        // P=18.4 mW, L=1 cm.
        const double g = std::sqrt(10.0 * 0.0184);
        const double r = g * std::tanh(g);
        const GaussianState out = apply_squeezer(vac, 0, r);
        CHECK(out.var_x(0) == doctest::Approx(0.25 * std::exp(-2.0 * r)).epsilon(1e-12));
        CHECK(out.var_x(0) == doctest::Approx(0.1767).epsilon(1e-3));
        CHECK(10.0 * std::log10(out.var_x(0) / 0.25) == doctest::Approx(-1.5).epsilon(0.01));
        // pure squeezing preserves the determinant
        CHECK(out.cov.determinant() == doctest::Approx(vac.cov.determinant()).epsilon(1e-12));
    }

    SUBCASE("squeeze angle rotates the squeezed axis") {
        const GaussianState out = apply_squeezer(vac, 0, 0.5, M_PI / 2.0);
        CHECK(out.var_y(0) == doctest::Approx(0.25 * std::exp(-1.0)));
        CHECK(out.var_x(0) == doctest::Approx(0.25 * std::exp(1.0)));
    }

    CHECK_THROWS_AS(apply_squeezer(vac, 1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(apply_squeezer(vac, 0, -0.1), std::invalid_argument);
}

TEST_CASE("beam splitter") {
    const GaussianState vac2 = vacuum_state(2);

    SUBCASE("equal modes rejected") {
        CHECK_THROWS_AS(apply_beam_splitter(vac2, 0, 0, 1.0), std::invalid_argument);
    }

    SUBCASE("phi = pi is identity up to sign") {
        GaussianState sq = apply_squeezer(vac2, 0, 0.3);
        const GaussianState out = apply_beam_splitter(sq, 0, 1, M_PI);
        CHECK(out.var_x(0) == doctest::Approx(sq.var_x(0)).epsilon(1e-12));
        CHECK(out.var_y(1) == doctest::Approx(sq.var_y(1)).epsilon(1e-12));
    }

    SUBCASE("joint vacuum is invariant") {
        for (double phi : {0.1, 0.7, M_PI / 2.0, 2.5}) {
            const GaussianState out = apply_beam_splitter(vac2, 0, 1, phi);
            CHECK((out.cov - vac2.cov).cwiseAbs().maxCoeff() < 1e-12);
        }
    }

    SUBCASE("50/50 on squeezed + vacuum matches dense conjugation oracle") {
        const GaussianState sq = apply_squeezer(vac2, 0, 0.4);
        const GaussianState out = apply_beam_splitter(sq, 0, 1, M_PI / 2.0);

        // Independent oracle: conjugate by the explicitly built 4x4 matrix.
        const double s = std::sin(M_PI / 4.0), c = std::cos(M_PI / 4.0);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
        m(0, 0) = m(1, 1) = s;
        m(0, 2) = m(1, 3) = c;
        m(2, 0) = m(3, 1) = c;
        m(2, 2) = m(3, 3) = -s;
        const Eigen::MatrixXd expected = m * sq.cov * m.transpose();
        CHECK((out.cov - expected).cwiseAbs().maxCoeff() < 1e-12);

        // Each output X variance is the average of the two input X variances.
        const double avg = 0.5 * (sq.var_x(0) + sq.var_x(1));
        CHECK(out.var_x(0) == doctest::Approx(avg).epsilon(1e-12));
        CHECK(out.var_x(1) == doctest::Approx(avg).epsilon(1e-12));
    }
}

TEST_CASE("phase rotation") {
    const GaussianState sq = apply_squeezer(vacuum_state(1), 0, 0.6);
    const GaussianState same = apply_phase_rotation(sq, 0, 0.0);
    CHECK((same.cov - sq.cov).cwiseAbs().maxCoeff() == 0.0);

    const GaussianState quarter = apply_phase_rotation(sq, 0, M_PI / 2.0);
    CHECK(quarter.var_x(0) == doctest::Approx(sq.var_y(0)).epsilon(1e-12));
    CHECK(quarter.var_y(0) == doctest::Approx(sq.var_x(0)).epsilon(1e-12));

    const GaussianState full = apply_phase_rotation(sq, 0, 2.0 * M_PI);
    CHECK((full.cov - sq.cov).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("loss channel") {
    const GaussianState vac = vacuum_state(1);

    SUBCASE("vacuum is a fixed point") {
        for (double z : {0.0, 0.2, 0.9, 1.0}) {
            const GaussianState out = apply_loss(vac, 0, z);
            CHECK((out.cov - vac.cov).cwiseAbs().maxCoeff() < 1e-15);
        }
    }

    SUBCASE("variance ratio mixes toward vacuum") {
        // on-chip ratio 0.707 through zeta = 0.2 -> 0.941
        const double r = -0.5 * std::log(0.707);
        const GaussianState sq = apply_squeezer(vac, 0, r);
        const GaussianState out = apply_loss(sq, 0, 0.2);
        CHECK(out.var_x(0) / 0.25 == doctest::Approx(0.2 * 0.707 + 0.8).epsilon(1e-9));
        CHECK(out.var_x(0) / 0.25 == doctest::Approx(0.9414).epsilon(1e-3));
    }

    SUBCASE("zeta = 1 identity and composition") {
        const GaussianState sq = apply_squeezer(vac, 0, 0.8);
        const GaussianState same = apply_loss(sq, 0, 1.0);
        CHECK((same.cov - sq.cov).cwiseAbs().maxCoeff() < 1e-15);

        const GaussianState two = apply_loss(apply_loss(sq, 0, 0.7), 0, 0.4);
        const GaussianState one = apply_loss(sq, 0, 0.7 * 0.4);
        CHECK((two.cov - one.cov).cwiseAbs().maxCoeff() < 1e-12);
    }

    CHECK_THROWS_AS(apply_loss(vac, 0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(apply_loss(vac, 0, 1.1), std::invalid_argument);
}

TEST_CASE("symplectic validity of every linear element") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> rdist(0.0, 1.5);
    for (int k = 0; k < 50; ++k) {
        CHECK(symplectic_defect(squeezer_op(3, k % 3, rdist(rng), angle(rng)).matrix) < 1e-10);
        CHECK(symplectic_defect(beam_splitter_op(3, 0, 1 + k % 2, angle(rng)).matrix) < 1e-10);
        CHECK(symplectic_defect(phase_rotation_op(3, k % 3, angle(rng)).matrix) < 1e-10);
    }
}

TEST_CASE("composition oracle on random 3-mode circuits") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> rdist(0.0, 1.0);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> mode(0, 2);

    for (int trial = 0; trial < 20; ++trial) {
        GaussianState state = vacuum_state(3);
        Eigen::MatrixXd total = Eigen::MatrixXd::Identity(6, 6);
        for (int step = 0; step < 8; ++step) {
            SymplecticOp op;
            switch (kind(rng)) {
                case 0:
                    op = squeezer_op(3, mode(rng), rdist(rng), angle(rng));
                    break;
                case 1: {
                    int i = mode(rng), j = mode(rng);
                    if (i == j) j = (j + 1) % 3;
                    op = beam_splitter_op(3, i, j, angle(rng));
                    break;
                }
                default:
                    op = phase_rotation_op(3, mode(rng), angle(rng));
            }
            state = apply_symplectic(state, op);
            total = op.matrix * total;
        }
        const Eigen::MatrixXd expected = total * (0.25 * Eigen::MatrixXd::Identity(6, 6)) *
                                         total.transpose();
        CHECK((state.cov - expected).cwiseAbs().maxCoeff() < 1e-10);
        // physicality: symplectic eigenvalues stay >= 1/4
        const Eigen::VectorXd nus = symplectic_eigenvalues(state.cov);
        for (Eigen::Index i = 0; i < nus.size(); ++i) CHECK(nus(i) >= 0.25 - 1e-9);
    }
}
