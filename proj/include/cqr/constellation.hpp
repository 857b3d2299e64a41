#pragma once

#include <string>
#include <vector>

#include "cqr/hermitian.hpp"

namespace cqr {

/// Dimensionless coherent-state field amplitude; |alpha|^2 is the mean
/// photon number of the state.
struct CoherentAmplitude {
    double re = 0.0;
    double im = 0.0;

    Complex value() const { return {re, im}; }
    double photon_number() const { return re * re + im * im; }
};

/// <a|b> for normalized coherent states: exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
Complex coherent_overlap(const CoherentAmplitude& a, const CoherentAmplitude& b);

enum class SignalKind { Binary, Psk3, Orth4, Ternary, Custom };

std::string to_string(SignalKind kind);

/// A named constellation of M pure states, reduced to its pairwise-overlap
/// matrix. Immutable after construction.
class SignalSet {
public:
    SignalKind kind() const { return kind_; }
    int size() const { return overlaps_.size(); }
    /// Photon number parameter; zero for Custom sets.
    double ns() const { return ns_; }
    Complex overlap(int i, int j) const { return overlaps_(i, j); }
    const CMat& overlaps() const { return overlaps_; }

    /// Binary, Psk3 and Orth4 are invariant under cyclic relabeling and take
    /// the uniform prior in every maximization; Ternary and Custom do not.
    bool is_symmetric() const { return kind_ == SignalKind::Binary || kind_ == SignalKind::Psk3 || kind_ == SignalKind::Orth4; }

private:
    friend SignalSet make_signal_set(SignalKind, double);
    friend SignalSet make_custom_signal_set(const CMat&);

    SignalSet(SignalKind kind, double ns, CMat overlaps)
        : kind_(kind), ns_(ns), overlaps_(std::move(overlaps)) {}

    SignalKind kind_;
    double ns_;
    CMat overlaps_;
};

/// Builds one of the built-in constellations at photon number ns.
SignalSet make_signal_set(SignalKind kind, double ns);

/// Wraps a user-supplied overlap matrix; must be Hermitian with unit
/// diagonal and positive semidefinite.
SignalSet make_custom_signal_set(const CMat& overlaps);

/// Probability vector on the M-simplex.
class PriorVector {
public:
    explicit PriorVector(std::vector<double> xi);
    static PriorVector uniform(int m);

    int size() const { return static_cast<int>(xi_.size()); }
    double operator[](int i) const { return xi_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return xi_; }

private:
    std::vector<double> xi_;
};

/// Hermitian positive-semidefinite matrix with unit trace,
/// g_ij = sqrt(xi_i) <psi_i|psi_j> sqrt(xi_j).
class WeightedGram {
public:
    int size() const { return entries_.size(); }
    const CMat& entries() const { return entries_; }

private:
    friend WeightedGram weighted_gram(const SignalSet&, const PriorVector&);
    explicit WeightedGram(CMat entries) : entries_(std::move(entries)) {}
    CMat entries_;
};

WeightedGram weighted_gram(const SignalSet& set, const PriorVector& xi);

}  // namespace cqr
