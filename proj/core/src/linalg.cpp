#include "qdc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qdc {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceRealTol = 1e-10;
constexpr double kTraceImagTol = 1e-12;
constexpr double kEigenFloor = -1e-10;
constexpr double kJacobiOffTol = 1e-13;
constexpr int kJacobiMaxSweeps = 60;

double off_diagonal_norm(const Matrix4c& a) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

Matrix4c Matrix4c::identity() {
    Matrix4c m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Matrix4c& Matrix4c::operator+=(const Matrix4c& rhs) {
    for (std::size_t k = 0; k < 16; ++k) a_[k] += rhs.a_[k];
    return *this;
}

Matrix4c& Matrix4c::operator-=(const Matrix4c& rhs) {
    for (std::size_t k = 0; k < 16; ++k) a_[k] -= rhs.a_[k];
    return *this;
}

Matrix4c& Matrix4c::operator*=(complexd s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Matrix4c operator*(const Matrix4c& lhs, const Matrix4c& rhs) {
    Matrix4c out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            complexd acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += lhs(i, k) * rhs(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

Matrix4c Matrix4c::adjoint() const {
    Matrix4c out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
}

complexd Matrix4c::trace() const {
    return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3);
}

double Matrix4c::frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : a_) s += std::norm(x);
    return std::sqrt(s);
}

Matrix4c outer(const Vector4c& ket, const Vector4c& bra) {
    Matrix4c out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = ket[static_cast<std::size_t>(i)] *
                                                std::conj(bra[static_cast<std::size_t>(j)]);
    return out;
}

double norm_squared(const Vector4c& v) {
    return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3]);
}

double max_abs_diff(const Matrix4c& a, const Matrix4c& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

double hermitian_asymmetry(const Matrix4c& a) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

EigenSystem hermitian_eigensystem(const Matrix4c& input) {
    const double asym = hermitian_asymmetry(input);
    if (asym > kHermitianTol) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: max |A(i,j) - conj(A(j,i))| = " << asym;
        throw validation_error(msg.str());
    }

    // Symmetrize to kill sub-tolerance asymmetry before iterating.
    Matrix4c a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    Matrix4c v = Matrix4c::identity();

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kJacobiOffTol) break;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const complexd apq = a(p, q);
                const double g = std::abs(apq);
                if (g < 1e-300) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const complexd phase = apq / g;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * g);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sign / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- J^dagger A J with the Givens-like unitary
                //   J(p,p)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase), J(q,q)=c,
                // chosen to zero A(p,q).
                for (int i = 0; i < 4; ++i) {
                    const complexd aip = a(i, p);
                    const complexd aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(phase) * aiq;
                    a(i, q) = s * phase * aip + c * aiq;
                }
                for (int j = 0; j < 4; ++j) {
                    const complexd apj = a(p, j);
                    const complexd aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * std::conj(phase) * apj + c * aqj;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (int i = 0; i < 4; ++i) {
                    const complexd vip = v(i, p);
                    const complexd viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(phase) * viq;
                    v(i, q) = s * phase * vip + c * viq;
                }
            }
        }
    }

    const double off = off_diagonal_norm(a);
    if (off > 1e-10 * std::max(1.0, input.frobenius_norm()))
        throw std::runtime_error("Jacobi eigensolver failed to converge");

    EigenSystem es;
    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> diag{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real()};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return diag[static_cast<std::size_t>(x)] > diag[static_cast<std::size_t>(y)]; });
    for (int k = 0; k < 4; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        es.values[static_cast<std::size_t>(k)] = diag[static_cast<std::size_t>(src)];
        for (int i = 0; i < 4; ++i) es.vectors(i, k) = v(i, src);
    }
    return es;
}

Spectrum hermitian_eigenvalues(const Matrix4c& a) {
    return Spectrum{hermitian_eigensystem(a).values};
}

void validate_density(const Matrix4c& rho, const std::string& what) {
    const double asym = hermitian_asymmetry(rho);
    if (asym > kHermitianTol) {
        std::ostringstream msg;
        msg << what << " is not Hermitian: max asymmetry " << asym;
        throw validation_error(msg.str());
    }
    const complexd tr = rho.trace();
    if (std::abs(tr.real() - 1.0) > kTraceRealTol || std::abs(tr.imag()) > kTraceImagTol) {
        std::ostringstream msg;
        msg << what << " has trace " << tr.real() << (tr.imag() < 0 ? "" : "+") << tr.imag()
            << "i, expected 1";
        throw validation_error(msg.str());
    }
    const auto spectrum = hermitian_eigenvalues(rho).values;
    if (spectrum.back() < kEigenFloor) {
        std::ostringstream msg;
        msg << what << " is not positive semidefinite: eigenvalue " << spectrum.back();
        throw validation_error(msg.str());
    }
}

double shannon_entropy(std::span<const double> p) {
    double sum = 0.0;
    for (double x : p) {
        if (x < -1e-12) {
            std::ostringstream msg;
            msg << "probability entry " << x << " below 0";
            throw validation_error(msg.str());
        }
        sum += std::max(x, 0.0);
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "probabilities sum to " << sum << ", expected 1";
        throw validation_error(msg.str());
    }
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

double von_neumann_entropy(const Matrix4c& rho) {
    validate_density(rho);
    const auto spectrum = hermitian_eigenvalues(rho).values;
    double h = 0.0;
    for (double lambda : spectrum)
        if (lambda > 0.0) h -= lambda * std::log2(lambda);
    return std::clamp(h, 0.0, 2.0);
}

double uhlmann_fidelity(const Matrix4c& rho, const Matrix4c& sigma) {
    validate_density(rho, "fidelity argument rho");
    validate_density(sigma, "fidelity argument sigma");

    // Identical inputs: the generic path would take sqrt of O(eps) eigenvalue
    // noise, turning 1e-16 roundoff into 1e-8. Fuchs-van de Graaf bounds the
    // true fidelity above 1 - 1e-13 here.
    if (max_abs_diff(rho, sigma) <= 1e-14) return 1.0;

    const EigenSystem es = hermitian_eigensystem(rho);
    Matrix4c sqrt_rho;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            complexd acc = 0.0;
            for (int k = 0; k < 4; ++k) {
                const double lambda = std::max(es.values[static_cast<std::size_t>(k)], 0.0);
                acc += es.vectors(i, k) * std::sqrt(lambda) * std::conj(es.vectors(j, k));
            }
            sqrt_rho(i, j) = acc;
        }
    }

    const Matrix4c inner = sqrt_rho * sigma * sqrt_rho;
    const auto ev = hermitian_eigensystem(inner).values;
    const double cutoff = 1e-11 * std::max(ev.front(), 0.0);
    double root_sum = 0.0;
    for (double lambda : ev)
        if (lambda > cutoff) root_sum += std::sqrt(lambda);
    return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

}  // namespace qdc
