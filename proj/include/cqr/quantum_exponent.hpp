#pragma once

#include <string>
#include <vector>

#include "cqr/constellation.hpp"
#include "cqr/spectra.hpp"

namespace cqr {

/// mu(s) = -ln sum_j lambda_j^(1+s), the random-coding exponent kernel.
/// Nondecreasing and concave in s on [0,1]; mu(0) = 0.
double mu(double s, const Spectrum& sp);

/// d mu / d s = (-sum lambda^(1+s) ln lambda) / (sum lambda^(1+s)),
/// zero eigenvalues excluded. Equals the von Neumann entropy at s = 0.
double dmu_ds(double s, const Spectrum& sp);

struct SOptimum {
    double s;
    double value;
};

/// Maximizes mu(s) - s*rate over s in [0,1]. Concavity of mu makes the
/// stationarity condition dmu_ds(s) = rate a bisection problem.
SOptimum optimize_s(double rate, const Spectrum& sp);

/// Objective of the prior search.
class PriorObjective {
public:
    static PriorObjective von_neumann() { return {Kind::VonNeumann, 0.0}; }
    static PriorObjective mu_at_s(double s) { return {Kind::MuAtS, s}; }
    static PriorObjective exponent_at_rate(double rate) { return {Kind::ExponentAtRate, rate}; }

    double evaluate(const SignalSet& set, const std::vector<double>& xi) const;

private:
    enum class Kind { VonNeumann, MuAtS, ExponentAtRate };
    PriorObjective(Kind kind, double param) : kind_(kind), param_(param) {}

    Kind kind_;
    double param_;
};

struct PriorOptimum {
    PriorVector xi;
    double value;
};

/// Maximizes the objective over the M-simplex: uniform short-circuit for
/// the covariant kinds, exhaustive 1/100 grid plus coordinate refinement
/// otherwise.
PriorOptimum optimize_priors(const SignalSet& set, const PriorObjective& objective);

struct ExponentPoint {
    double rate;
    double value;
    double s_opt;
    PriorVector xi_opt;
};

/// Curve regime: s_opt pinned at 1 (linear slope -1 segment), interior
/// stationary s, or the zero tail beyond the entropy rate.
enum class Regime { S1, Interior, Zero };

Regime regime_of(const ExponentPoint& p);
std::string to_string(Regime r);

struct CurveMeta {
    SignalKind kind;
    double ns;
    double r_min;
    double r_max;
    int n_points;
};

struct ExponentCurve {
    CurveMeta meta;
    std::vector<ExponentPoint> points;
};

/// E_Qr(rate) = max over s and priors of mu(s, xi) - s*rate, with both
/// optimizer witnesses recorded.
ExponentPoint reliability_at_rate(const SignalSet& set, double rate);

/// Samples reliability_at_rate on the inclusive uniform grid
/// [r_min, r_max]. Grid points are independent, so they may be evaluated
/// on several threads; output stays ordered by rate.
ExponentCurve reliability_curve(const SignalSet& set, double r_min, double r_max, int n_points, int threads = 1);

struct CutoffRate {
    double r0;
    PriorVector xi_opt;
};

/// R0 = max over priors of -ln sum_ij xi_i xi_j |<psi_i|psi_j>|^2, the
/// exponent at rate zero.
CutoffRate cutoff_rate(const SignalSet& set);

/// 2 exp(-n E_Qr(rate)); deliberately not clamped to [0,1].
double error_probability_bound(long n, double rate, const SignalSet& set);

}  // namespace cqr
