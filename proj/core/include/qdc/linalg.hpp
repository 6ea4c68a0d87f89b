#pragma once

#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace qdc {

using complexd = std::complex<double>;

/// Thrown when an input violates a documented precondition (bad density
/// matrix, out-of-range parameter, malformed sweep spec, ...).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense 4x4 complex matrix, row-major, value semantics. The fixed dimension
/// covers every operator in the effective coding space.
class Matrix4c {
  public:
    Matrix4c() : a_{} {}

    static Matrix4c identity();
    static Matrix4c zero() { return Matrix4c{}; }

    complexd& operator()(int i, int j) { return a_[static_cast<std::size_t>(4 * i + j)]; }
    const complexd& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(4 * i + j)];
    }

    Matrix4c& operator+=(const Matrix4c& rhs);
    Matrix4c& operator-=(const Matrix4c& rhs);
    Matrix4c& operator*=(complexd s);

    friend Matrix4c operator+(Matrix4c lhs, const Matrix4c& rhs) { return lhs += rhs; }
    friend Matrix4c operator-(Matrix4c lhs, const Matrix4c& rhs) { return lhs -= rhs; }
    friend Matrix4c operator*(complexd s, Matrix4c m) { return m *= s; }
    friend Matrix4c operator*(Matrix4c m, complexd s) { return m *= s; }
    friend Matrix4c operator*(const Matrix4c& lhs, const Matrix4c& rhs);

    Matrix4c adjoint() const;
    complexd trace() const;
    double frobenius_norm() const;

  private:
    std::array<complexd, 16> a_;
};

using Vector4c = std::array<complexd, 4>;

Matrix4c outer(const Vector4c& ket, const Vector4c& bra);

/// |psi><psi|
inline Matrix4c projector(const Vector4c& psi) { return outer(psi, psi); }

double norm_squared(const Vector4c& v);

/// max_ij |A(i,j) - B(i,j)|
double max_abs_diff(const Matrix4c& a, const Matrix4c& b);

/// max_ij |A(i,j) - conj(A(j,i))|
double hermitian_asymmetry(const Matrix4c& a);

/// Real eigenvalues of a Hermitian matrix, sorted descending.
struct Spectrum {
    std::array<double, 4> values;
};

/// Full eigendecomposition: A = V diag(values) V^dagger, eigenvectors in the
/// columns of `vectors`, eigenvalues descending.
struct EigenSystem {
    std::array<double, 4> values;
    Matrix4c vectors;
};

/// Cyclic complex Jacobi rotations; converges when the off-diagonal Frobenius
/// norm drops below 1e-13. Throws validation_error if the input is not
/// Hermitian within 1e-12 (the message names the worst asymmetry).
EigenSystem hermitian_eigensystem(const Matrix4c& a);
Spectrum hermitian_eigenvalues(const Matrix4c& a);

/// Checks the density-matrix invariants: Hermitian within 1e-12, trace 1
/// within 1e-10 (imaginary part below 1e-12), eigenvalues >= -1e-10.
/// Throws validation_error naming `what` on failure.
void validate_density(const Matrix4c& rho, const std::string& what = "density matrix");

/// -sum p_i log2 p_i with 0 log 0 = 0. Entries may dip to -1e-12 (clamped);
/// the sum must be 1 within 1e-9.
double shannon_entropy(std::span<const double> p);

double von_neumann_entropy(const Matrix4c& rho);

/// Uhlmann fidelity, squared convention: F = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double uhlmann_fidelity(const Matrix4c& rho, const Matrix4c& sigma);

}  // namespace qdc
