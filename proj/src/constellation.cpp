#include "cqr/constellation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cqr/errors.hpp"

namespace cqr {

Complex coherent_overlap(const CoherentAmplitude& a, const CoherentAmplitude& b) {
    const Complex av = a.value();
    const Complex bv = b.value();
    return std::exp(Complex{-0.5 * (std::norm(av) + std::norm(bv)), 0.0} + std::conj(av) * bv);
}

std::string to_string(SignalKind kind) {
    switch (kind) {
        case SignalKind::Binary: return "binary";
        case SignalKind::Psk3: return "psk3";
        case SignalKind::Orth4: return "orth4";
        case SignalKind::Ternary: return "ternary";
        case SignalKind::Custom: return "custom";
    }
    return "unknown";
}

namespace {

CMat overlaps_from_amplitudes(const std::vector<CoherentAmplitude>& amps) {
    const int m = static_cast<int>(amps.size());
    CMat o(m);
    for (int i = 0; i < m; ++i) {
        o(i, i) = 1.0;
        for (int j = i + 1; j < m; ++j) {
            const Complex v = coherent_overlap(amps[static_cast<std::size_t>(i)], amps[static_cast<std::size_t>(j)]);
            o(i, j) = v;
            o(j, i) = std::conj(v);
        }
    }
    return o;
}

}  // namespace

SignalSet make_signal_set(SignalKind kind, double ns) {
    if (!(ns >= 0.0)) throw std::domain_error("photon number must be >= 0");
    const double alpha = std::sqrt(ns);

    switch (kind) {
        case SignalKind::Binary: {
            const std::vector<CoherentAmplitude> amps{{alpha, 0.0}, {-alpha, 0.0}};
            return SignalSet(kind, ns, overlaps_from_amplitudes(amps));
        }
        case SignalKind::Psk3: {
            const double c = std::cos(2.0 * std::numbers::pi / 3.0);
            const double s = std::sin(2.0 * std::numbers::pi / 3.0);
            const std::vector<CoherentAmplitude> amps{{alpha, 0.0}, {alpha * c, alpha * s}, {alpha * c, -alpha * s}};
            return SignalSet(kind, ns, overlaps_from_amplitudes(amps));
        }
        case SignalKind::Orth4: {
            // Four single-excitation multimode states; every cross overlap is
            // <alpha|0><0|alpha> = e^{-ns}.
            CMat o(4);
            const double k = std::exp(-ns);
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) o(i, j) = (i == j) ? 1.0 : k;
            }
            return SignalSet(kind, ns, std::move(o));
        }
        case SignalKind::Ternary: {
            const std::vector<CoherentAmplitude> amps{{0.0, 0.0}, {alpha, 0.0}, {-alpha, 0.0}};
            return SignalSet(kind, ns, overlaps_from_amplitudes(amps));
        }
        case SignalKind::Custom:
            throw std::invalid_argument("use make_custom_signal_set for custom overlap matrices");
    }
    throw std::invalid_argument("unknown signal kind");
}

SignalSet make_custom_signal_set(const CMat& overlaps) {
    const int m = overlaps.size();
    if (m < 2) throw std::invalid_argument("a signal set needs at least two states");
    if (!overlaps.is_hermitian(1e-12)) throw NonHermitian("overlap matrix is not Hermitian");
    for (int i = 0; i < m; ++i) {
        if (std::abs(overlaps(i, i) - Complex{1.0, 0.0}) > 1e-12) {
            throw NonUnitDiagonal("overlap matrix diagonal must be 1");
        }
    }
    const std::vector<double> lam = jacobi_hermitian_eigenvalues(overlaps);
    for (double l : lam) {
        if (l < -1e-9) throw NotPositiveSemidefinite("overlap matrix has a negative eigenvalue");
    }
    return SignalSet(SignalKind::Custom, 0.0, overlaps);
}

PriorVector::PriorVector(std::vector<double> xi) : xi_(std::move(xi)) {
    if (xi_.empty()) throw std::invalid_argument("prior vector is empty");
    double sum = 0.0;
    for (double& p : xi_) {
        if (p < 0.0 && p >= -1e-12) p = 0.0;
        if (p > 1.0 && p <= 1.0 + 1e-12) p = 1.0;
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("prior entries must lie in [0,1]");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("prior entries must sum to 1");
}

PriorVector PriorVector::uniform(int m) {
    if (m < 1) throw std::invalid_argument("prior vector is empty");
    std::vector<double> xi(static_cast<std::size_t>(m), 1.0 / m);
    // Force the exact-sum invariant for m that does not divide 1 evenly.
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < xi.size(); ++i) sum += xi[i];
    xi.back() = 1.0 - sum;
    return PriorVector(std::move(xi));
}

WeightedGram weighted_gram(const SignalSet& set, const PriorVector& xi) {
    const int m = set.size();
    if (xi.size() != m) throw DimensionMismatch("prior length does not match signal set size");

    std::vector<double> roots(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) roots[static_cast<std::size_t>(i)] = std::sqrt(xi[i]);

    CMat g(m);
    for (int i = 0; i < m; ++i) {
        g(i, i) = xi[i];
        for (int j = i + 1; j < m; ++j) {
            const Complex v = roots[static_cast<std::size_t>(i)] * set.overlap(i, j) * roots[static_cast<std::size_t>(j)];
            g(i, j) = v;
            g(j, i) = std::conj(v);
        }
    }
    return WeightedGram(std::move(g));
}

}  // namespace cqr
