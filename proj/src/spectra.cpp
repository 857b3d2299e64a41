#include "cqr/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cqr/errors.hpp"

namespace cqr {

Spectrum::Spectrum(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) throw std::invalid_argument("spectrum is empty");
    double sum = 0.0;
    for (double& l : lambdas_) {
        if (l < 0.0 && l >= -1e-10) l = 0.0;
        if (l > 1.0 && l <= 1.0 + 1e-10) l = 1.0;
        if (l < 0.0 || l > 1.0) throw std::invalid_argument("eigenvalue outside [0,1]");
        sum += l;
    }
    if (std::abs(sum - 1.0) > 1e-10) throw std::invalid_argument("eigenvalues must sum to 1");
    std::sort(lambdas_.begin(), lambdas_.end(), std::greater<double>());
}

Spectrum hermitian_eigenvalues(const WeightedGram& g) {
    return Spectrum(jacobi_hermitian_eigenvalues(g.entries()));
}

Spectrum binary_eigenvalues_closed_form(double xi1, double kappa) {
    if (xi1 < 0.0 || xi1 > 1.0) throw std::domain_error("xi1 must lie in [0,1]");
    if (kappa < 0.0 || kappa > 1.0) throw std::domain_error("kappa must lie in [0,1]");
    double radicand = 1.0 - 4.0 * (1.0 - kappa * kappa) * xi1 * (1.0 - xi1);
    if (radicand < -1e-12) throw std::domain_error("negative radicand in binary eigenvalues");
    if (radicand < 0.0) radicand = 0.0;
    const double r = std::sqrt(radicand);
    return Spectrum({0.5 * (1.0 + r), 0.5 * (1.0 - r)});
}

double von_neumann_entropy(const Spectrum& sp) {
    double h = 0.0;
    for (double l : sp.lambdas()) {
        if (l > 0.0) h -= l * std::log(l);
    }
    return h;
}

}  // namespace cqr
