#include "steering/quantum.hpp"

#include "steering/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace steering {

double norm(BlochVector3 v) { return std::sqrt(dot(v, v)); }

BlochVector3 normalized(BlochVector3 v) {
    const double n = norm(v);
    if (!std::isfinite(n) || n == 0.0) {
        throw std::invalid_argument("cannot normalize zero or non-finite vector");
    }
    return (1.0 / n) * v;
}

Matrix2 identity2() { return Matrix2::Identity(); }
Matrix4 identity4() { return Matrix4::Identity(); }

Matrix2 sigma_x() {
    Matrix2 m;
    m << 0, 1, 1, 0;
    return m;
}

Matrix2 sigma_y() {
    Matrix2 m;
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Matrix2 sigma_z() {
    Matrix2 m;
    m << 1, 0, 0, -1;
    return m;
}

Matrix2 pauli_dot(BlochVector3 v) {
    Matrix2 m;
    m << Complex(v.z, 0), Complex(v.x, -v.y), Complex(v.x, v.y), Complex(-v.z, 0);
    return m;
}

Matrix4 kron(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

Matrix2 partial_trace_alice(const Matrix4 &rho) {
    // Index convention: |i_A i_B> -> 2*i_A + i_B.
    Matrix2 out = Matrix2::Zero();
    for (int ia = 0; ia < 2; ++ia) {
        out += rho.block<2, 2>(2 * ia, 2 * ia);
    }
    return out;
}

BlochVector3 bloch_of(const Matrix2 &rho) {
    return {(rho * sigma_x()).trace().real(), (rho * sigma_y()).trace().real(),
            (rho * sigma_z()).trace().real()};
}

bool is_hermitian(const Matrix2 &m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Matrix4 &m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double min_eigenvalue(const Matrix2 &m) {
    Eigen::SelfAdjointEigenSolver<Matrix2> es(0.5 * (m + m.adjoint()),
                                              Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double min_eigenvalue(const Matrix4 &m) {
    Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (m + m.adjoint()),
                                              Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

TwoQubitState TwoQubitState::from_density_matrix(const Matrix4 &rho) {
    if (!rho.allFinite()) {
        throw std::invalid_argument("density matrix has non-finite entries");
    }
    if (!is_hermitian(rho, kHermTol)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > kTraceTol ||
        std::abs(rho.trace().imag()) > kTraceTol) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    if (min_eigenvalue(rho) < -kPsdTol) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
    return TwoQubitState(rho);
}

TwoQubitState TwoQubitState::pure_schmidt(double a) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw std::invalid_argument("Schmidt coefficient a must lie in [0,1]");
    }
    const double b = std::sqrt(1.0 - a * a);
    Eigen::Vector4cd psi;
    psi << a, 0, 0, b;
    return TwoQubitState(psi * psi.adjoint());
}

TwoQubitState TwoQubitState::werner(double w) {
    if (!(w >= 0.0 && w <= 1.0)) {
        throw std::invalid_argument("Werner weight w must lie in [0,1]");
    }
    return TwoQubitState(w * singlet().rho() + (1.0 - w) * 0.25 * identity4());
}

TwoQubitState TwoQubitState::singlet() {
    Eigen::Vector4cd psi;
    psi << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
    return TwoQubitState(psi * psi.adjoint());
}

TwoQubitState TwoQubitState::phi_plus() {
    Eigen::Vector4cd psi;
    psi << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
    return TwoQubitState(psi * psi.adjoint());
}

TwoQubitState random_pure_state(Rng &rng) {
    Eigen::Vector4cd psi;
    for (int i = 0; i < 4; ++i) {
        psi(i) = Complex(rng.gaussian(), rng.gaussian());
    }
    psi.normalize();
    return TwoQubitState::from_density_matrix(psi * psi.adjoint());
}

TwoQubitState random_mixed_state(Rng &rng) {
    Matrix4 g;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            g(i, j) = Complex(rng.gaussian(), rng.gaussian());
        }
    }
    Matrix4 rho = g * g.adjoint();
    rho /= rho.trace().real();
    return TwoQubitState::from_density_matrix(rho);
}

} // namespace steering
