#pragma once

#include <cstdint>
#include <vector>

#include "mpbt/rational.hpp"
#include "mpbt/young.hpp"

namespace mpbt {

/// N ports, k teleported systems, local dimension d; n = N + k sites in the
/// dense picture.
struct ProtocolParams {
    int ports;       // N
    int teleported;  // k
    int local_dim;   // d

    ProtocolParams(int N, int k, int d);
    int total_sites() const { return ports + teleported; }
    std::int64_t signal_count() const;  // |I| = k! C(N,k)
};

/// One eigenvalue block of the teleportation operator: alpha labels the
/// S(N-k) irrep, mu in alpha the S(N) irrep reached by adding k boxes.
struct SpectrumEntry {
    YoungDiagram alpha;
    YoungDiagram mu;
    Rational eigenvalue;
    std::int64_t multiplicity;  // paths(mu/alpha) * m_alpha * d_mu
};

/// lambda_mu(alpha) = (k! C(N,k) / d^N) (m_mu / m_alpha) (d_alpha / d_mu).
Rational mpbt_eigenvalue(const ProtocolParams& params, const YoungDiagram& alpha,
                         const YoungDiagram& mu);

/// Full spectrum, alpha and mu each in decreasing lexicographic order,
/// restricted to diagrams with at most d rows.
std::vector<SpectrumEntry> mpbt_spectrum(const ProtocolParams& params);

/// Exact weighted spectral sum; equals k! C(N,k) for every valid params.
Rational spectrum_trace(const std::vector<SpectrumEntry>& spectrum);

/// Deterministic-protocol entanglement fidelity,
/// F = d^{-(N+2k)} sum_alpha ( sum_{mu in alpha} paths(mu/alpha)
///     sqrt(m_mu d_mu) )^2.
double entanglement_fidelity(const ProtocolParams& params);

struct FidelityTerm {
    YoungDiagram alpha;
    double weight_sum;     // sum over mu of paths(mu/alpha) sqrt(m_mu d_mu)
    double contribution;   // weight_sum^2 / d^{N+2k}
};
std::vector<FidelityTerm> fidelity_breakdown(const ProtocolParams& params);

struct ProbabilityTerm {
    YoungDiagram alpha;
    YoungDiagram minimizer;  // mu* attaining min of m_alpha d_alpha / lambda
    Rational contribution;   // m_alpha d_alpha / lambda_{mu*}(alpha)
};

struct SuccessProbability {
    Rational value;
    std::vector<ProbabilityTerm> terms;
};

/// Probabilistic-protocol success probability,
/// p = (k! C(N,k) / d^{2N}) sum_alpha min_{mu in alpha}
///     m_alpha d_alpha / lambda_mu(alpha), exact.
SuccessProbability success_probability(const ProtocolParams& params);

/// Multi-port protocol against plain port-based teleportation with one port
/// of dimension d^k carrying the same payload.
struct ProtocolComparison {
    double fidelity_multi;
    double fidelity_bigport;
    Rational probability_multi;
    Rational probability_bigport;
};
ProtocolComparison compare_protocols(int N, int k, int d);

struct PerformanceReport {
    ProtocolParams params;
    double fidelity;
    Rational probability;
    std::vector<SpectrumEntry> spectrum;
};
PerformanceReport evaluate(const ProtocolParams& params);

namespace detail {

/// Fidelity sum without the ProtocolParams precondition; lets boundary
/// algebra like N = k = 1 be evaluated directly.
double fidelity_sum(int N, int k, int d);

/// The k = 1 closed form with all path counts pinned to one.
double pbt_fidelity(int N, int d);

/// Index of the smallest ratio, first occurrence on ties.
std::size_t min_ratio_index(const std::vector<Rational>& ratios);

}  // namespace detail

}  // namespace mpbt
