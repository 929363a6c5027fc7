#pragma once

#include <Eigen/Dense>
#include <complex>

namespace steering {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// Real 3-vector in the Bloch ball. Measurement directions carry unit
/// vectors; the owning types (DichotomicObservable, MubPair) enforce that.
struct BlochVector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline BlochVector3 operator+(BlochVector3 a, BlochVector3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline BlochVector3 operator-(BlochVector3 a, BlochVector3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline BlochVector3 operator*(double s, BlochVector3 v) {
    return {s * v.x, s * v.y, s * v.z};
}
inline BlochVector3 operator-(BlochVector3 v) { return {-v.x, -v.y, -v.z}; }

inline double dot(BlochVector3 a, BlochVector3 b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline BlochVector3 cross(BlochVector3 a, BlochVector3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}
double norm(BlochVector3 v);

/// Unit vector along v. Throws std::invalid_argument if |v| is zero or
/// not finite.
BlochVector3 normalized(BlochVector3 v);

Matrix2 identity2();
Matrix4 identity4();
Matrix2 sigma_x();
Matrix2 sigma_y();
Matrix2 sigma_z();

/// v_x σ_x + v_y σ_y + v_z σ_z. Hermitian and traceless for real v.
Matrix2 pauli_dot(BlochVector3 v);

/// Kronecker product, basis order |00>,|01>,|10>,|11> (first factor on
/// the left qubit).
Matrix4 kron(const Matrix2 &a, const Matrix2 &b);

/// Trace out the first (left) qubit.
Matrix2 partial_trace_alice(const Matrix4 &rho);

/// Bloch vector of a single-qubit operator: r_i = Re Tr[σ_i ρ].
BlochVector3 bloch_of(const Matrix2 &rho);

bool is_hermitian(const Matrix2 &m, double tol);
bool is_hermitian(const Matrix4 &m, double tol);

/// Smallest eigenvalue of the Hermitian part (m + m†)/2.
double min_eigenvalue(const Matrix2 &m);
double min_eigenvalue(const Matrix4 &m);

/// Two-qubit density matrix. Construction validates Hermiticity (1e-12),
/// unit trace (1e-12) and positivity (min eigenvalue >= -1e-10).
class TwoQubitState {
  public:
    static constexpr double kHermTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPsdTol = 1e-10;

    /// Validating constructor for an arbitrary density matrix.
    static TwoQubitState from_density_matrix(const Matrix4 &rho);

    /// a|00> + sqrt(1-a^2)|11> with a in [0,1].
    static TwoQubitState pure_schmidt(double a);

    /// w |psi-><psi-| + (1-w) I/4 with w in [0,1].
    static TwoQubitState werner(double w);

    /// (|01> - |10>)/sqrt(2) projector.
    static TwoQubitState singlet();

    /// (|00> + |11>)/sqrt(2) projector.
    static TwoQubitState phi_plus();

    const Matrix4 &rho() const { return rho_; }

  private:
    explicit TwoQubitState(Matrix4 rho) : rho_(std::move(rho)) {}
    Matrix4 rho_;
};

class Rng;

/// Haar-random pure state: normalized 4-component complex Gaussian vector.
TwoQubitState random_pure_state(Rng &rng);

/// Random full-rank mixed state: G G† / Tr(G G†) for complex Gaussian G.
TwoQubitState random_mixed_state(Rng &rng);

} // namespace steering
