#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "steering/quantum.hpp"
#include "steering/rng.hpp"

using namespace steering;

namespace {

double max_abs_diff(const Matrix2 &a, const Matrix2 &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix4 &a, const Matrix4 &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

BlochVector3 random_ball_vector(Rng &rng) {
    while (true) {
        BlochVector3 v{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                       rng.uniform(-1.0, 1.0)};
        if (dot(v, v) <= 1.0) {
            return v;
        }
    }
}

Matrix2 qubit_state(const BlochVector3 &r) {
    return 0.5 * (identity2() + pauli_dot(r));
}

} // namespace

TEST_CASE("pauli_dot matches the Pauli matrices on the axes") {
    CHECK(max_abs_diff(pauli_dot({1, 0, 0}), sigma_x()) == 0.0);
    CHECK(max_abs_diff(pauli_dot({0, 1, 0}), sigma_y()) == 0.0);
    CHECK(max_abs_diff(pauli_dot({0, 0, 1}), sigma_z()) == 0.0);

    const Matrix2 z = pauli_dot({0, 0, 1});
    CHECK(z(0, 0) == Complex(1, 0));
    CHECK(z(1, 1) == Complex(-1, 0));
    CHECK(z(0, 1) == Complex(0, 0));

    CHECK(pauli_dot({0, 0, 0}).cwiseAbs().maxCoeff() == 0.0);

    const double s = 1.0 / std::sqrt(2.0);
    const Matrix2 diag = pauli_dot({s, 0, s});
    CHECK(std::abs(diag(0, 0) - Complex(s, 0)) < 1e-15);
    CHECK(std::abs(diag(0, 1) - Complex(s, 0)) < 1e-15);
    CHECK(std::abs(diag(1, 0) - Complex(s, 0)) < 1e-15);
    CHECK(std::abs(diag(1, 1) - Complex(-s, 0)) < 1e-15);
}

TEST_CASE("pauli_dot is linear and squares to the identity on unit vectors") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const BlochVector3 u = random_ball_vector(rng);
        const BlochVector3 v = random_ball_vector(rng);
        const double alpha = rng.uniform(-2.0, 2.0);
        const double beta = rng.uniform(-2.0, 2.0);
        const Matrix2 lhs = pauli_dot(alpha * u + beta * v);
        const Matrix2 rhs = alpha * pauli_dot(u) + beta * pauli_dot(v);
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);

        const BlochVector3 unit = normalized({rng.gaussian(), rng.gaussian(),
                                              rng.gaussian()});
        const Matrix2 sq = pauli_dot(unit) * pauli_dot(unit);
        CHECK(max_abs_diff(sq, identity2()) < 1e-12);
    }
}

TEST_CASE("kron reproduces the index formula and the mixed product") {
    CHECK(max_abs_diff(kron(identity2(), identity2()), identity4()) == 0.0);

    Matrix4 zz = Matrix4::Zero();
    zz(0, 0) = 1;
    zz(1, 1) = -1;
    zz(2, 2) = -1;
    zz(3, 3) = 1;
    CHECK(max_abs_diff(kron(sigma_z(), sigma_z()), zz) == 0.0);

    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix2 a, b, c, d;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                a(i, j) = Complex(rng.gaussian(), rng.gaussian());
                b(i, j) = Complex(rng.gaussian(), rng.gaussian());
                c(i, j) = Complex(rng.gaussian(), rng.gaussian());
                d(i, j) = Complex(rng.gaussian(), rng.gaussian());
            }
        }
        const Matrix4 k = kron(a, b);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int p = 0; p < 2; ++p) {
                    for (int q = 0; q < 2; ++q) {
                        CHECK(std::abs(k(2 * i + p, 2 * j + q) -
                                       a(i, j) * b(p, q)) < 1e-14);
                    }
                }
            }
        }
        const Matrix4 lhs = kron(a, b) * kron(c, d);
        const Matrix4 rhs = kron(Matrix2(a * c), Matrix2(b * d));
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("pure Schmidt states have the expected entries and purity") {
    const Matrix4 product = TwoQubitState::pure_schmidt(1.0).rho();
    CHECK(std::abs(product(0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(product.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));

    const Matrix4 phi = TwoQubitState::pure_schmidt(1.0 / std::sqrt(2.0)).rho();
    CHECK(std::abs(phi(0, 0) - Complex(0.5, 0)) < 1e-12);
    CHECK(std::abs(phi(0, 3) - Complex(0.5, 0)) < 1e-12);
    CHECK(std::abs(phi(3, 0) - Complex(0.5, 0)) < 1e-12);
    CHECK(std::abs(phi(3, 3) - Complex(0.5, 0)) < 1e-12);
    CHECK(max_abs_diff(phi, TwoQubitState::phi_plus().rho()) < 1e-12);

    const Matrix4 rho = TwoQubitState::pure_schmidt(0.6).rho();
    CHECK(std::abs(rho(0, 0) - Complex(0.36, 0)) < 1e-12);
    CHECK(std::abs(rho(3, 3) - Complex(0.64, 0)) < 1e-12);
    CHECK(std::abs(rho(0, 3) - Complex(0.48, 0)) < 1e-12);
    CHECK(std::abs(rho(3, 0) - Complex(0.48, 0)) < 1e-12);
    CHECK(std::abs(rho(1, 1)) == 0.0);
    CHECK(std::abs(rho(2, 2)) == 0.0);

    for (double a : {0.0, 0.3, 0.6, 1.0}) {
        const Matrix4 r = TwoQubitState::pure_schmidt(a).rho();
        const double purity = (r * r).trace().real();
        CHECK(purity == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(TwoQubitState::pure_schmidt(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(TwoQubitState::pure_schmidt(1.2), std::invalid_argument);
}

TEST_CASE("Werner states interpolate between noise and the singlet") {
    CHECK(max_abs_diff(TwoQubitState::werner(0.0).rho(),
                       Matrix4(0.25 * identity4())) < 1e-15);
    CHECK(max_abs_diff(TwoQubitState::werner(1.0).rho(),
                       TwoQubitState::singlet().rho()) < 1e-15);

    const Matrix4 half = TwoQubitState::werner(0.5).rho();
    Complex zz(0, 0);
    const Matrix4 op = kron(sigma_z(), sigma_z());
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            zz += op(i, j) * half(j, i);
        }
    }
    CHECK(zz.real() == doctest::Approx(-0.5).epsilon(1e-12));

    CHECK_THROWS_AS(TwoQubitState::werner(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(TwoQubitState::werner(1.01), std::invalid_argument);
}

TEST_CASE("density-matrix validation rejects malformed inputs") {
    Matrix4 ok = TwoQubitState::phi_plus().rho();
    CHECK_NOTHROW(TwoQubitState::from_density_matrix(ok));

    Matrix4 skew = ok;
    skew(0, 1) += Complex(1e-6, 0); // breaks Hermiticity only
    CHECK_THROWS_AS(TwoQubitState::from_density_matrix(skew),
                    std::invalid_argument);

    Matrix4 traced = 1.5 * ok;
    CHECK_THROWS_AS(TwoQubitState::from_density_matrix(traced),
                    std::invalid_argument);

    Matrix4 negative = Matrix4::Zero();
    negative(0, 0) = 0.75;
    negative(1, 1) = 0.75;
    negative(2, 2) = -0.5;
    CHECK_THROWS_AS(TwoQubitState::from_density_matrix(negative),
                    std::invalid_argument);
}

TEST_CASE("partial trace over Alice recovers Bob's factor") {
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const Matrix2 rho_a = qubit_state(random_ball_vector(rng));
        const Matrix2 rho_b = qubit_state(random_ball_vector(rng));
        const Matrix2 back = partial_trace_alice(kron(rho_a, rho_b));
        CHECK(max_abs_diff(back, rho_b) < 1e-12);
    }

    const Matrix2 reduced = partial_trace_alice(TwoQubitState::phi_plus().rho());
    CHECK(max_abs_diff(reduced, Matrix2(0.5 * identity2())) < 1e-12);

    // Effect (I + sigma_z)/2 on Alice's side of the singlet: Bob keeps half
    // of |1><1| by perfect anticorrelation.
    const Matrix2 plus = 0.5 * (identity2() + sigma_z());
    const Matrix2 sliced = partial_trace_alice(
        Matrix4(kron(plus, identity2()) * TwoQubitState::singlet().rho()));
    Matrix2 expected = Matrix2::Zero();
    expected(1, 1) = 0.5;
    CHECK(max_abs_diff(sliced, expected) < 1e-12);
}

TEST_CASE("partial trace preserves the total trace") {
    Rng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const TwoQubitState st = random_mixed_state(rng);
        const Matrix2 red = partial_trace_alice(st.rho());
        CHECK(std::abs(red.trace().real() - 1.0) < 1e-12);
        CHECK(std::abs(red.trace().imag()) < 1e-14);
    }
}

TEST_CASE("Bloch vectors of reduced states stay inside the ball") {
    Rng rng(15);
    for (int trial = 0; trial < 25; ++trial) {
        const BlochVector3 r = random_ball_vector(rng);
        const BlochVector3 back = bloch_of(qubit_state(r));
        CHECK(norm(back - r) < 1e-12);

        const TwoQubitState st =
            (trial % 2 == 0) ? random_pure_state(rng) : random_mixed_state(rng);
        const BlochVector3 reduced = bloch_of(partial_trace_alice(st.rho()));
        CHECK(norm(reduced) <= 1.0 + 1e-12);
    }
}

TEST_CASE("random states are valid, reproducible, and distinct") {
    Rng rng_a(77);
    Rng rng_b(77);
    const TwoQubitState p1 = random_pure_state(rng_a);
    const TwoQubitState p2 = random_pure_state(rng_b);
    CHECK(max_abs_diff(p1.rho(), p2.rho()) == 0.0);

    const Matrix4 r = p1.rho();
    CHECK((r * r).trace().real() == doctest::Approx(1.0).epsilon(1e-12));

    const TwoQubitState m1 = random_mixed_state(rng_a);
    CHECK(std::abs(m1.rho().trace().real() - 1.0) < 1e-12);
    CHECK(min_eigenvalue(m1.rho()) > 0.0); // Wishart draws are full rank
    CHECK(max_abs_diff(m1.rho(), p1.rho()) > 1e-3);
}

TEST_CASE("min_eigenvalue agrees with known spectra") {
    Matrix2 d2 = Matrix2::Zero();
    d2(0, 0) = 0.25;
    d2(1, 1) = 0.75;
    CHECK(min_eigenvalue(d2) == doctest::Approx(0.25).epsilon(1e-12));

    Matrix4 d4 = Matrix4::Zero();
    d4(0, 0) = -0.125;
    d4(1, 1) = 0.5;
    d4(2, 2) = 0.25;
    d4(3, 3) = 0.375;
    CHECK(min_eigenvalue(d4) == doctest::Approx(-0.125).epsilon(1e-12));
}
