#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "cqr/errors.hpp"
#include "cqr/gallager.hpp"
#include "cqr/quantum_exponent.hpp"

using namespace cqr;

namespace {

StochasticMatrix identity_channel() { return StochasticMatrix(2, 2, {1.0, 0.0, 0.0, 1.0}); }

double helstrom_error(double xi1, double kappa) {
    return 0.5 * (1.0 - std::sqrt(1.0 - 4.0 * xi1 * (1.0 - xi1) * kappa * kappa));
}

double binary_entropy(double q) {
    double h = 0.0;
    if (q > 0.0) h -= q * std::log(q);
    if (q < 1.0) h -= (1.0 - q) * std::log(1.0 - q);
    return h;
}

}  // namespace

TEST_CASE("stochastic matrix validation") {
    CHECK_NOTHROW(StochasticMatrix(2, 2, {0.3, 0.7, 0.5, 0.5}));
    CHECK_THROWS_AS(StochasticMatrix(2, 2, {0.3, 0.6, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(StochasticMatrix(2, 2, {1.2, -0.2, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(StochasticMatrix(2, 2, {0.3, 0.7}), DimensionMismatch);
}

TEST_CASE("helstrom channel with uniform prior") {
    const double kappa = std::exp(-1.0);
    const StochasticMatrix ch = helstrom_channel(0.5, kappa);
    const double g = std::sqrt(1.0 - kappa * kappa);
    CHECK(ch(0, 0) == doctest::Approx((1.0 + g) / 2.0).epsilon(1e-14));
    CHECK(ch(0, 1) == doctest::Approx((1.0 - g) / 2.0).epsilon(1e-14));
    CHECK(ch(1, 0) == doctest::Approx((1.0 - g) / 2.0).epsilon(1e-14));
    CHECK(ch(1, 1) == doctest::Approx((1.0 + g) / 2.0).epsilon(1e-14));
}

TEST_CASE("helstrom channel of orthogonal states is the identity") {
    const StochasticMatrix ch = helstrom_channel(0.5, 0.0);
    CHECK(ch(0, 0) == 1.0);
    CHECK(ch(0, 1) == 0.0);
    CHECK(ch(1, 0) == 0.0);
    CHECK(ch(1, 1) == 1.0);
}

TEST_CASE("helstrom channel matches the published lambda-form entries") {
    // Entries (2F + lambda - 2 kappa^2 + 1)/4F etc. with lambda = xi1/xi2 and
    // F = sqrt(((1+lambda)/2)^2 - lambda kappa^2).
    for (double xi1 : {0.2, 0.37, 0.5, 0.81}) {
        for (double kappa : {0.1, std::exp(-1.0), 0.8}) {
            const double lam = xi1 / (1.0 - xi1);
            const double f = std::sqrt(0.25 * (1.0 + lam) * (1.0 + lam) - lam * kappa * kappa);
            const double k2 = kappa * kappa;
            const StochasticMatrix ch = helstrom_channel(xi1, kappa);
            CHECK(ch(0, 0) == doctest::Approx((2.0 * f + lam - 2.0 * k2 + 1.0) / (4.0 * f)).epsilon(1e-12));
            CHECK(ch(0, 1) == doctest::Approx((2.0 * f - lam + 2.0 * k2 - 1.0) / (4.0 * f)).epsilon(1e-12));
            CHECK(ch(1, 0) == doctest::Approx((2.0 * f - lam + 2.0 * lam * k2 - 1.0) / (4.0 * f)).epsilon(1e-12));
            CHECK(ch(1, 1) == doctest::Approx((2.0 * f + lam - 2.0 * lam * k2 + 1.0) / (4.0 * f)).epsilon(1e-12));
        }
    }
}

TEST_CASE("helstrom channel reproduces the minimum average error") {
    for (int i = 1; i <= 10; ++i) {
        for (int j = 0; j <= 9; ++j) {
            const double xi1 = i / 11.0;
            const double kappa = j / 10.0;
            const StochasticMatrix ch = helstrom_channel(xi1, kappa);
            const double pe = xi1 * ch(0, 1) + (1.0 - xi1) * ch(1, 0);
            CHECK(std::abs(pe - helstrom_error(xi1, kappa)) < 1e-12);
            CHECK(std::abs(ch(0, 0) + ch(0, 1) - 1.0) < 1e-12);
            CHECK(std::abs(ch(1, 0) + ch(1, 1) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("helstrom channel rejects degenerate configurations") {
    CHECK_THROWS_AS(helstrom_channel(0.5, 1.0), DegenerateChannel);
    CHECK_THROWS_AS(helstrom_channel(0.0, 0.5), DegenerateChannel);
    CHECK_THROWS_AS(helstrom_channel(1.0, 0.5), DegenerateChannel);
    CHECK_THROWS_AS(helstrom_channel(-0.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(helstrom_channel(0.5, 1.5), std::domain_error);
}

TEST_CASE("gallager E0 vanishes at rho=0") {
    CHECK(gallager_e0(0.0, PriorVector({0.3, 0.7}), helstrom_channel(0.3, 0.5)) == 0.0);
}

TEST_CASE("gallager E0 of the identity channel is rho ln 2 at uniform prior") {
    for (double rho : {0.3, 0.7, 1.0}) {
        CHECK(gallager_e0(rho, PriorVector::uniform(2), identity_channel()) ==
              doctest::Approx(rho * std::log(2.0)).epsilon(1e-13));
    }
}

TEST_CASE("gallager E0 frozen value at rho=1") {
    // Double sum evaluated independently to 20 digits for xi=1/2, kappa=e^-1.
    const double e0 = gallager_e0(1.0, PriorVector::uniform(2), helstrom_channel(0.5, std::exp(-1.0)));
    CHECK(e0 == doctest::Approx(0.37988549304172248).epsilon(1e-14));
}

TEST_CASE("gallager E0 validates its arguments") {
    CHECK_THROWS_AS(gallager_e0(1.5, PriorVector::uniform(2), identity_channel()), std::domain_error);
    CHECK_THROWS_AS(gallager_e0(0.5, PriorVector::uniform(3), identity_channel()), DimensionMismatch);
}

TEST_CASE("gallager E0 is concave and nondecreasing in rho") {
    const StochasticMatrix ch = helstrom_channel(0.5, std::exp(-1.0));
    const PriorVector xi = PriorVector::uniform(2);
    double prev = 0.0;
    double prev_slope = 1e300;
    for (int i = 1; i <= 50; ++i) {
        const double rho = i / 50.0;
        const double cur = gallager_e0(rho, xi, ch);
        CHECK(cur >= prev - 1e-9);
        const double slope = (cur - prev) * 50.0;
        CHECK(slope <= prev_slope + 1e-9);
        prev = cur;
        prev_slope = slope;
    }
}

TEST_CASE("gallager E0 slope at rho=0 is the mutual information") {
    const StochasticMatrix ch = helstrom_channel(0.5, std::exp(-1.0));
    const PriorVector xi = PriorVector::uniform(2);
    const double h = 1e-6;
    // Richardson extrapolation of the forward difference.
    const double slope = (4.0 * gallager_e0(h, xi, ch) - gallager_e0(2.0 * h, xi, ch)) / (2.0 * h);
    CHECK(std::abs(slope - mutual_information(xi, ch)) < 1e-6);
}

TEST_CASE("gallager exponent of the identity channel at rate 0") {
    const GallagerPoint p = gallager_exponent(0.0, identity_channel());
    CHECK(p.value == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(p.rho_opt == 1.0);
}

TEST_CASE("gallager exponent vanishes at capacity") {
    const StochasticMatrix ch = helstrom_channel(0.5, std::exp(-1.0));
    const double cap = mutual_information(PriorVector::uniform(2), ch);
    const GallagerPoint p = gallager_exponent(cap + 0.01, ch);
    CHECK(p.value == 0.0);
}

TEST_CASE("gallager exponent matches a dense (rho, xi) grid scan") {
    const StochasticMatrix ch = helstrom_channel(0.5, std::exp(-1.0));
    const double rate = 0.05;
    double best = -1e300;
    for (int i = 0; i <= 1000; ++i) {
        const PriorVector xi({i / 1000.0, 1.0 - i / 1000.0});
        for (int j = 1; j <= 1000; ++j) {
            const double rho = j / 1000.0;
            best = std::max(best, -rho * rate + gallager_e0(rho, xi, ch));
        }
    }
    const GallagerPoint p = gallager_exponent(rate, ch);
    CHECK(std::abs(p.value - best) < 1e-6);
    // Witness identity.
    CHECK(p.value == doctest::Approx(-p.rho_opt * rate + gallager_e0(p.rho_opt, p.xi_opt, ch)).epsilon(1e-9));
}

TEST_CASE("mutual information of the identity channel is ln 2") {
    CHECK(mutual_information(PriorVector::uniform(2), identity_channel()) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("mutual information of a constant-row channel is 0") {
    const StochasticMatrix ch(2, 2, {0.4, 0.6, 0.4, 0.6});
    CHECK(std::abs(mutual_information(PriorVector({0.3, 0.7}), ch)) < 1e-15);
}

TEST_CASE("mutual information of the uniform helstrom channel") {
    const double kappa = std::exp(-1.0);
    const double q = (1.0 - std::sqrt(1.0 - kappa * kappa)) / 2.0;
    const double expected = std::log(2.0) - binary_entropy(q);
    CHECK(mutual_information(PriorVector::uniform(2), helstrom_channel(0.5, kappa)) ==
          doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("mutual information checks dimensions") {
    CHECK_THROWS_AS(mutual_information(PriorVector::uniform(3), identity_channel()), DimensionMismatch);
}

TEST_CASE("capacity C1 of nearly orthogonal binary states is ln 2") {
    const UncodedCapacity c = capacity_c1(make_signal_set(SignalKind::Binary, 50.0));
    CHECK(c.c1 == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(std::abs(c.xi_opt[0] - 0.5) < 1e-6);
}

TEST_CASE("capacity C1 collapses for nearly identical states") {
    const UncodedCapacity c = capacity_c1(make_signal_set(SignalKind::Binary, 0.001));
    CHECK(c.c1 > 0.0);
    CHECK(c.c1 < 0.01);
}

TEST_CASE("capacity C1 at ns=0.25 matches an independent optimizer") {
    // scipy bounded scalar maximization: C1 = 0.362670817281 at xi1 = 0.5.
    const UncodedCapacity c = capacity_c1(make_signal_set(SignalKind::Binary, 0.25));
    CHECK(c.c1 == doctest::Approx(0.362670817281).epsilon(1e-8));
}

TEST_CASE("capacity C1 sits strictly below the von Neumann entropy") {
    const SignalSet set = make_signal_set(SignalKind::Binary, 0.5);
    const UncodedCapacity c = capacity_c1(set);
    const double h = optimize_priors(set, PriorObjective::von_neumann()).value;
    CHECK(c.c1 < h);
}

TEST_CASE("capacity C1 rejects non-binary sets") {
    CHECK_THROWS_AS(capacity_c1(make_signal_set(SignalKind::Ternary, 1.0)), UnsupportedKind);
}

TEST_CASE("coupled binary gallager exponent at rate 0 uses rho=1") {
    const SignalSet set = make_signal_set(SignalKind::Binary, 1.0);
    const GallagerPoint p = binary_gallager_exponent(set, 0.0);
    CHECK(p.rho_opt == 1.0);
    CHECK(p.value > 0.0);
    // Witness identity against the prior's own measurement channel.
    const StochasticMatrix ch = helstrom_channel(p.xi_opt[0], std::abs(set.overlap(0, 1)));
    CHECK(p.value == doctest::Approx(gallager_e0(1.0, p.xi_opt, ch)).epsilon(1e-9));
}

TEST_CASE("coupled binary gallager exponent crosses zero at C1") {
    const SignalSet set = make_signal_set(SignalKind::Binary, 1.0);
    const double c1 = capacity_c1(set).c1;
    CHECK(binary_gallager_exponent(set, c1 - 1e-3).value > 0.0);
    CHECK(binary_gallager_exponent(set, c1 + 1e-3).value == 0.0);
}

TEST_CASE("coupled binary gallager exponent rejects other kinds") {
    CHECK_THROWS_AS(binary_gallager_exponent(make_signal_set(SignalKind::Psk3, 1.0), 0.1), UnsupportedKind);
}
