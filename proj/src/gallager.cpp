#include "cqr/gallager.hpp"

#include <cmath>
#include <stdexcept>

#include "cqr/errors.hpp"
#include "cqr/simplex.hpp"

namespace cqr {

namespace {

constexpr double kRhoFloor = 1e-12;
constexpr double kRhoTol = 1e-10;

}  // namespace

StochasticMatrix::StochasticMatrix(int inputs, int outputs, std::vector<double> p)
    : inputs_(inputs), outputs_(outputs), p_(std::move(p)) {
    if (inputs_ < 1 || outputs_ < 1) throw std::invalid_argument("channel needs at least one input and output");
    if (p_.size() != static_cast<std::size_t>(inputs_) * static_cast<std::size_t>(outputs_)) {
        throw DimensionMismatch("transition matrix size does not match dimensions");
    }
    for (int i = 0; i < inputs_; ++i) {
        double row = 0.0;
        for (int j = 0; j < outputs_; ++j) {
            double& v = p_[static_cast<std::size_t>(i) * static_cast<std::size_t>(outputs_) + static_cast<std::size_t>(j)];
            if (v < 0.0 && v >= -1e-12) v = 0.0;
            if (v > 1.0 && v <= 1.0 + 1e-12) v = 1.0;
            if (v < 0.0 || v > 1.0) throw std::invalid_argument("transition probabilities must lie in [0,1]");
            row += v;
        }
        if (std::abs(row - 1.0) > 1e-12) throw std::invalid_argument("channel rows must sum to 1");
    }
}

StochasticMatrix helstrom_channel(double xi1, double kappa) {
    if (xi1 < 0.0 || xi1 > 1.0) throw std::domain_error("xi1 must lie in [0,1]");
    if (kappa < 0.0 || kappa > 1.0) throw std::domain_error("kappa must lie in [0,1]");
    if (kappa == 1.0) throw DegenerateChannel("identical states cannot be discriminated");
    if (xi1 == 0.0 || xi1 == 1.0) throw DegenerateChannel("prior must be interior for the binary measurement");

    const double xi2 = 1.0 - xi1;
    const double k2 = kappa * kappa;
    const double g = std::sqrt(1.0 - 4.0 * xi1 * xi2 * k2);
    // (g - 1)/2 written cancellation-free.
    const double half_gm1 = -2.0 * xi1 * xi2 * k2 / (1.0 + g);
    const double p12 = (xi2 * k2 + half_gm1) / g;
    const double p21 = (xi1 * k2 + half_gm1) / g;
    return StochasticMatrix(2, 2, {1.0 - p12, p12, p21, 1.0 - p21});
}

double gallager_e0(double rho, const PriorVector& xi, const StochasticMatrix& ch) {
    if (rho < 0.0 || rho > 1.0) throw std::domain_error("rho must lie in [0,1]");
    if (xi.size() != ch.inputs()) throw DimensionMismatch("prior length does not match channel inputs");
    if (rho == 0.0) return 0.0;

    const double inv = 1.0 / (1.0 + rho);
    double outer = 0.0;
    for (int j = 0; j < ch.outputs(); ++j) {
        double inner = 0.0;
        for (int i = 0; i < ch.inputs(); ++i) {
            const double p = ch(i, j);
            if (p > 0.0 && xi[i] > 0.0) inner += xi[i] * std::pow(p, inv);
        }
        if (inner > 0.0) outer += std::pow(inner, 1.0 + rho);
    }
    return -std::log(outer);
}

namespace {

struct ScalarOptimum {
    double x;
    double value;
};

// max over rho in (0,1] of -rho*rate + E0(rho, xi, ch); concave in rho.
ScalarOptimum best_rho(double rate, const PriorVector& xi, const StochasticMatrix& ch) {
    auto f = [&](double rho) { return -rho * rate + gallager_e0(rho, xi, ch); };
    ScalarOptimum best{golden_section_maximize(f, kRhoFloor, 1.0, kRhoTol), 0.0};
    best.value = f(best.x);
    const double at_one = f(1.0);
    if (at_one > best.value) best = {1.0, at_one};
    return best;
}

// Coarse 1/200 scan of a function of the interior prior coordinate xi1,
// then golden refinement inside the bracketing cells.
ScalarOptimum scan_interior_prior(const std::function<double(double)>& f, double x_tol) {
    const int n = 200;
    ScalarOptimum best{0.5, -1e300};
    for (int i = 1; i < n; ++i) {
        const double x = static_cast<double>(i) / n;
        const double v = f(x);
        if (v > best.value) best = {x, v};
    }
    const double lo = std::max(best.x - 1.0 / n, 1e-9);
    const double hi = std::min(best.x + 1.0 / n, 1.0 - 1e-9);
    const double x = golden_section_maximize(f, lo, hi, x_tol);
    const double v = f(x);
    if (v > best.value) best = {x, v};
    return best;
}

double binary_kappa(const SignalSet& set) {
    return std::abs(set.overlap(0, 1));
}

}  // namespace

GallagerPoint gallager_exponent(double rate, const StochasticMatrix& ch) {
    if (rate < 0.0) throw std::domain_error("rate must be >= 0");

    const int m = ch.inputs();
    auto objective = [&](const std::vector<double>& xi) {
        return best_rho(rate, PriorVector(xi), ch).value;
    };
    const int resolution = (m == 2) ? 200 : 100;
    const SimplexOptimum best = maximize_over_simplex(m, resolution, 1e-6, objective);
    const ScalarOptimum inner = best_rho(rate, PriorVector(best.xi), ch);

    double value = inner.value;
    if (value < 0.0) value = 0.0;
    return {rate, value, inner.x, PriorVector(best.xi)};
}

double mutual_information(const PriorVector& xi, const StochasticMatrix& ch) {
    if (xi.size() != ch.inputs()) throw DimensionMismatch("prior length does not match channel inputs");

    std::vector<double> q(static_cast<std::size_t>(ch.outputs()), 0.0);
    for (int j = 0; j < ch.outputs(); ++j) {
        for (int i = 0; i < ch.inputs(); ++i) q[static_cast<std::size_t>(j)] += xi[i] * ch(i, j);
    }
    double info = 0.0;
    for (int i = 0; i < ch.inputs(); ++i) {
        if (xi[i] == 0.0) continue;
        for (int j = 0; j < ch.outputs(); ++j) {
            const double p = ch(i, j);
            if (p > 0.0) info += xi[i] * p * std::log(p / q[static_cast<std::size_t>(j)]);
        }
    }
    return info;
}

UncodedCapacity capacity_c1(const SignalSet& set) {
    if (set.kind() != SignalKind::Binary) throw UnsupportedKind("capacity_c1 handles binary sets only");
    const double kappa = binary_kappa(set);
    if (kappa == 1.0) return {0.0, PriorVector::uniform(2)};

    auto f = [&](double xi1) {
        return mutual_information(PriorVector({xi1, 1.0 - xi1}), helstrom_channel(xi1, kappa));
    };
    const ScalarOptimum best = scan_interior_prior(f, 1e-8);
    return {best.value, PriorVector({best.x, 1.0 - best.x})};
}

GallagerPoint binary_gallager_exponent(const SignalSet& set, double rate) {
    if (set.kind() != SignalKind::Binary) throw UnsupportedKind("binary_gallager_exponent handles binary sets only");
    if (rate < 0.0) throw std::domain_error("rate must be >= 0");
    const double kappa = binary_kappa(set);
    if (kappa == 1.0) return {rate, 0.0, kRhoFloor, PriorVector::uniform(2)};

    auto value_at = [&](double xi1) {
        const PriorVector xi({xi1, 1.0 - xi1});
        return best_rho(rate, xi, helstrom_channel(xi1, kappa)).value;
    };
    const ScalarOptimum best = scan_interior_prior(value_at, 1e-8);
    const PriorVector xi({best.x, 1.0 - best.x});
    const ScalarOptimum inner = best_rho(rate, xi, helstrom_channel(best.x, kappa));

    double value = inner.value;
    if (value < 0.0) value = 0.0;
    return {rate, value, inner.x, xi};
}

}  // namespace cqr
