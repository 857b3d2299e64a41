#pragma once

#include <vector>

#include "cqr/constellation.hpp"

namespace cqr {

/// Eigenvalues of a WeightedGram: nonnegative, sorted descending, unit sum.
class Spectrum {
public:
    /// Sorts descending, clamps rounding noise at both ends of [0,1] and
    /// checks the unit-sum invariant.
    explicit Spectrum(std::vector<double> lambdas);

    int size() const { return static_cast<int>(lambdas_.size()); }
    double operator[](int j) const { return lambdas_[static_cast<std::size_t>(j)]; }
    const std::vector<double>& lambdas() const { return lambdas_; }

private:
    std::vector<double> lambdas_;
};

/// Spectrum of the weighted Gram matrix, which equals the spectrum of the
/// ensemble density operator.
Spectrum hermitian_eigenvalues(const WeightedGram& g);

/// The two eigenvalues (1 +- sqrt(1 - 4(1-kappa^2) xi (1-xi)))/2 of the
/// binary weighted Gram, sorted descending.
Spectrum binary_eigenvalues_closed_form(double xi1, double kappa);

/// -sum lambda ln lambda in nats, with 0 ln 0 = 0.
double von_neumann_entropy(const Spectrum& sp);

}  // namespace cqr
