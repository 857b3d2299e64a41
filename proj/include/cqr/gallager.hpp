#pragma once

#include <vector>

#include "cqr/constellation.hpp"

namespace cqr {

/// Row-stochastic transition matrix p(j|i) of a classical channel.
class StochasticMatrix {
public:
    /// Row-major probabilities; every row must sum to 1 within 1e-12.
    StochasticMatrix(int inputs, int outputs, std::vector<double> p);

    int inputs() const { return inputs_; }
    int outputs() const { return outputs_; }
    double operator()(int i, int j) const {
        return p_[static_cast<std::size_t>(i) * static_cast<std::size_t>(outputs_) + static_cast<std::size_t>(j)];
    }

private:
    int inputs_;
    int outputs_;
    std::vector<double> p_;
};

/// Transition matrix of the binary pure-state channel read out by the
/// minimum-average-error projective measurement. kappa is the (real)
/// overlap of the two states; the projectors, and therefore the matrix,
/// depend on the prior.
StochasticMatrix helstrom_channel(double xi1, double kappa);

/// E0(rho, xi) = -ln sum_j (sum_i xi_i p_ij^(1/(1+rho)))^(1+rho).
double gallager_e0(double rho, const PriorVector& xi, const StochasticMatrix& ch);

struct GallagerPoint {
    double rate;
    double value;
    double rho_opt;
    PriorVector xi_opt;
};

/// max over rho in (0,1] and input priors of -rho*rate + E0(rho, xi) for a
/// fixed channel matrix; clamps a vanishing supremum to exactly 0.
GallagerPoint gallager_exponent(double rate, const StochasticMatrix& ch);

/// sum_ij xi_i p_ij ln(p_ij / q_j) in nats, q_j the output distribution.
double mutual_information(const PriorVector& xi, const StochasticMatrix& ch);

struct UncodedCapacity {
    double c1;
    PriorVector xi_opt;
};

/// Single-symbol capacity of the binary set: max over the prior of the
/// mutual information through the prior's own Helstrom measurement.
UncodedCapacity capacity_c1(const SignalSet& set);

/// Gallager exponent of a binary pure-state set where one prior drives
/// both the Helstrom measurement and the random-coding input distribution,
/// so the curve's zero crossing lands at capacity_c1.
GallagerPoint binary_gallager_exponent(const SignalSet& set, double rate);

}  // namespace cqr
