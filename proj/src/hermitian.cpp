#include "cqr/hermitian.hpp"

#include <cmath>

#include "cqr/errors.hpp"

namespace cqr {

CMat CMat::identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool CMat::is_hermitian(double tol) const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        }
    }
    return true;
}

double CMat::trace_real() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i).real();
    return t;
}

namespace {

double off_diagonal_norm(const CMat& a) {
    double s = 0.0;
    const int n = a.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q).
// The unitary is diag(1, e^{-i phi}) followed by the real rotation that
// diagonalizes [[app, |apq|], [|apq|, aqq]].
void rotate(CMat& a, int p, int q) {
    const double apq_abs = std::abs(a(p, q));
    if (apq_abs == 0.0) return;
    const Complex phase = a(p, q) / apq_abs;
    const Complex phase_conj = std::conj(phase);
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * apq_abs);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.size();
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * phase_conj * akq;
        a(k, q) = s * akp + c * phase_conj * akq;
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
    }
    a(p, p) = app - t * apq_abs;
    a(q, q) = aqq + t * apq_abs;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

}  // namespace

std::vector<double> jacobi_hermitian_eigenvalues(CMat a, double off_tol, int max_sweeps) {
    const int n = a.size();
    if (n == 0) return {};
    if (n == 1) return {a(0, 0).real()};

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) < off_tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                rotate(a, p, q);
            }
        }
    }
    if (off_diagonal_norm(a) >= off_tol) {
        throw NoConvergence("jacobi eigensolver did not converge within the sweep budget");
    }

    std::vector<double> lam(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) lam[static_cast<std::size_t>(i)] = a(i, i).real();
    return lam;
}

}  // namespace cqr
