#include "cqr/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace cqr {

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double x_tol) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

namespace {

void enumerate_grid(int m, int remaining, std::vector<int>& ks, int coord, int resolution,
                    const std::function<void(const std::vector<int>&)>& visit) {
    if (coord == m - 1) {
        ks[static_cast<std::size_t>(coord)] = remaining;
        visit(ks);
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        ks[static_cast<std::size_t>(coord)] = k;
        enumerate_grid(m, remaining - k, ks, coord + 1, resolution, visit);
    }
}

void clamp01(std::vector<double>& xi) {
    for (double& x : xi) {
        if (x < 0.0) x = 0.0;
        if (x > 1.0) x = 1.0;
    }
}

}  // namespace

SimplexOptimum maximize_over_simplex(int m, int grid_resolution, double coord_tol,
                                     const std::function<double(const std::vector<double>&)>& f) {
    if (m < 1) throw std::invalid_argument("simplex dimension must be positive");
    if (grid_resolution < 1) throw std::invalid_argument("grid resolution must be positive");

    std::vector<double> best_xi(static_cast<std::size_t>(m), 0.0);
    double best_value = -1e300;

    std::vector<int> ks(static_cast<std::size_t>(m), 0);
    std::vector<double> xi(static_cast<std::size_t>(m), 0.0);
    enumerate_grid(m, grid_resolution, ks, 0, grid_resolution, [&](const std::vector<int>& k) {
        for (std::size_t i = 0; i < xi.size(); ++i) {
            xi[i] = static_cast<double>(k[i]) / static_cast<double>(grid_resolution);
        }
        const double v = f(xi);
        if (v > best_value) {
            best_value = v;
            best_xi = xi;
        }
    });

    // Pairwise mass transfer keeps the simplex constraint exact while the
    // golden section slides probability between two coordinates at a time.
    std::vector<double> trial = best_xi;
    for (int sweep = 0; sweep < 200; ++sweep) {
        double moved = 0.0;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const double lo = -best_xi[static_cast<std::size_t>(i)];
                const double hi = best_xi[static_cast<std::size_t>(j)];
                if (hi - lo < coord_tol) continue;
                auto g = [&](double t) {
                    trial = best_xi;
                    trial[static_cast<std::size_t>(i)] += t;
                    trial[static_cast<std::size_t>(j)] -= t;
                    clamp01(trial);
                    return f(trial);
                };
                const double t = golden_section_maximize(g, lo, hi, 0.5 * coord_tol);
                const double v = g(t);
                if (v > best_value) {
                    best_value = v;
                    best_xi[static_cast<std::size_t>(i)] += t;
                    best_xi[static_cast<std::size_t>(j)] -= t;
                    clamp01(best_xi);
                    moved = std::max(moved, std::abs(t));
                }
            }
        }
        if (moved < coord_tol) break;
    }

    return {best_xi, best_value};
}

}  // namespace cqr
