#include "cqr/quantum_exponent.hpp"

#include <cmath>
#include <stdexcept>

#include "cqr/parallel.hpp"
#include "cqr/simplex.hpp"

namespace cqr {

namespace {

void check_s(double s) {
    if (s < 0.0 || s > 1.0) throw std::domain_error("s must lie in [0,1]");
}

}  // namespace

double mu(double s, const Spectrum& sp) {
    check_s(s);
    if (s == 0.0) return 0.0;
    double sum = 0.0;
    for (double l : sp.lambdas()) {
        if (l > 0.0) sum += std::pow(l, 1.0 + s);
    }
    return -std::log(sum);
}

double dmu_ds(double s, const Spectrum& sp) {
    check_s(s);
    double num = 0.0;
    double den = 0.0;
    for (double l : sp.lambdas()) {
        if (l > 0.0) {
            const double w = std::pow(l, 1.0 + s);
            num -= w * std::log(l);
            den += w;
        }
    }
    return num / den;
}

SOptimum optimize_s(double rate, const Spectrum& sp) {
    if (rate < 0.0) throw std::domain_error("rate must be >= 0");
    if (dmu_ds(1.0, sp) >= rate) return {1.0, mu(1.0, sp) - rate};
    if (dmu_ds(0.0, sp) <= rate) return {0.0, 0.0};

    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo >= 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (dmu_ds(mid, sp) > rate) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double s = 0.5 * (lo + hi);
    return {s, mu(s, sp) - s * rate};
}

double PriorObjective::evaluate(const SignalSet& set, const std::vector<double>& xi) const {
    const Spectrum sp = hermitian_eigenvalues(weighted_gram(set, PriorVector(xi)));
    switch (kind_) {
        case Kind::VonNeumann: return von_neumann_entropy(sp);
        case Kind::MuAtS: return mu(param_, sp);
        case Kind::ExponentAtRate: return optimize_s(param_, sp).value;
    }
    return 0.0;
}

namespace {

constexpr int kPriorGridResolution = 100;
constexpr double kPriorCoordTol = 1e-6;

PriorOptimum search_priors(const SignalSet& set, const std::function<double(const std::vector<double>&)>& f) {
    if (set.is_symmetric()) {
        PriorVector uniform = PriorVector::uniform(set.size());
        return {uniform, f(uniform.values())};
    }
    SimplexOptimum best = maximize_over_simplex(set.size(), kPriorGridResolution, kPriorCoordTol, f);
    return {PriorVector(best.xi), best.value};
}

}  // namespace

PriorOptimum optimize_priors(const SignalSet& set, const PriorObjective& objective) {
    return search_priors(set, [&](const std::vector<double>& xi) { return objective.evaluate(set, xi); });
}

Regime regime_of(const ExponentPoint& p) {
    if (p.s_opt == 1.0) return Regime::S1;
    if (p.value == 0.0) return Regime::Zero;
    return Regime::Interior;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::S1: return "s1";
        case Regime::Interior: return "interior";
        case Regime::Zero: return "zero";
    }
    return "unknown";
}

ExponentPoint reliability_at_rate(const SignalSet& set, double rate) {
    if (rate < 0.0) throw std::domain_error("rate must be >= 0");
    PriorOptimum prior = optimize_priors(set, PriorObjective::exponent_at_rate(rate));
    const Spectrum sp = hermitian_eigenvalues(weighted_gram(set, prior.xi));
    const SOptimum s = optimize_s(rate, sp);
    return {rate, s.value, s.s, prior.xi};
}

ExponentCurve reliability_curve(const SignalSet& set, double r_min, double r_max, int n_points, int threads) {
    if (!(r_min >= 0.0) || !(r_min < r_max)) throw std::invalid_argument("need 0 <= r_min < r_max");
    if (n_points < 2) throw std::invalid_argument("need at least two grid points");

    const double step = (r_max - r_min) / (n_points - 1);
    std::vector<ExponentPoint> points(static_cast<std::size_t>(n_points),
                                      ExponentPoint{0.0, 0.0, 0.0, PriorVector::uniform(set.size())});
    parallel_for(n_points, threads, [&](int i) {
        const double r = (i == n_points - 1) ? r_max : r_min + step * i;
        points[static_cast<std::size_t>(i)] = reliability_at_rate(set, r);
    });

    // Curve sanity: nonincreasing and convex up to numerical slack.
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].value > points[i - 1].value + 1e-9) {
            throw std::logic_error("reliability curve is not nonincreasing");
        }
    }
    for (std::size_t i = 2; i < points.size(); ++i) {
        const double second = points[i].value - 2.0 * points[i - 1].value + points[i - 2].value;
        if (second < -1e-7) throw std::logic_error("reliability curve is not convex");
    }

    return {CurveMeta{set.kind(), set.ns(), r_min, r_max, n_points}, std::move(points)};
}

CutoffRate cutoff_rate(const SignalSet& set) {
    const int m = set.size();
    auto objective = [&](const std::vector<double>& xi) {
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
            sum += xi[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < m; ++j) {
                sum += 2.0 * xi[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>(j)] * std::norm(set.overlap(i, j));
            }
        }
        return -std::log(sum);
    };
    PriorOptimum best = search_priors(set, objective);
    return {best.value, best.xi};
}

double error_probability_bound(long n, double rate, const SignalSet& set) {
    if (n < 1) throw std::domain_error("block length must be >= 1");
    const ExponentPoint p = reliability_at_rate(set, rate);
    return 2.0 * std::exp(-static_cast<double>(n) * p.value);
}

}  // namespace cqr
