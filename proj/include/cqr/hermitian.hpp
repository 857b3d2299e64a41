#pragma once

#include <complex>
#include <vector>

namespace cqr {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class CMat {
public:
    CMat() = default;
    explicit CMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    static CMat identity(int n);

    int size() const { return n_; }

    Complex& operator()(int i, int j) { return a_[idx(i, j)]; }
    const Complex& operator()(int i, int j) const { return a_[idx(i, j)]; }

    bool is_hermitian(double tol) const;
    double trace_real() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<Complex> a_;
};

/// Eigenvalues of a complex Hermitian matrix by cyclic Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius norm drops below off_tol;
/// throws NoConvergence if the sweep budget runs out first.
std::vector<double> jacobi_hermitian_eigenvalues(CMat a, double off_tol = 1e-13, int max_sweeps = 60);

}  // namespace cqr
