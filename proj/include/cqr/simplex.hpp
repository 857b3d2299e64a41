#pragma once

#include <functional>
#include <vector>

namespace cqr {

/// Golden-section maximization of a unimodal function on [lo, hi].
/// Returns the argmax once the bracketing interval is shorter than x_tol.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double x_tol);

struct SimplexOptimum {
    std::vector<double> xi;
    double value;
};

/// Maximizes f over the probability simplex: exhaustive grid with
/// grid_resolution steps per coordinate, then pairwise mass-transfer
/// refinement (golden section along each transfer direction) until no
/// coordinate moves by more than coord_tol.
SimplexOptimum maximize_over_simplex(int m, int grid_resolution, double coord_tol,
                                     const std::function<double(const std::vector<double>&)>& f);

}  // namespace cqr
