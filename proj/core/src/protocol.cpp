#include "mpbt/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpbt {

ProtocolParams::ProtocolParams(int N, int k, int d) : ports(N), teleported(k), local_dim(d) {
    if (N < 1) throw std::invalid_argument("need at least one port");
    if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
    if (k < 1 || k > N / 2) {
        throw std::invalid_argument("teleported system count must satisfy 1 <= k <= floor(N/2)");
    }
}

std::int64_t ProtocolParams::signal_count() const {
    return checked_mul(factorial(teleported), binomial(ports, teleported));
}

Rational mpbt_eigenvalue(const ProtocolParams& params, const YoungDiagram& alpha,
                         const YoungDiagram& mu) {
    const int N = params.ports, k = params.teleported, d = params.local_dim;
    if (alpha.boxes() != N - k || mu.boxes() != N) {
        throw std::invalid_argument("eigenvalue labels must satisfy alpha |- N-k, mu |- N");
    }
    if (alpha.row_count() > d || mu.row_count() > d || !mu.contains(alpha)) {
        throw std::invalid_argument("mu is not reachable from alpha on the reduced lattice");
    }
    const std::int64_t m_mu = weyl_multiplicity(mu, d);
    const std::int64_t m_alpha = weyl_multiplicity(alpha, d);
    if (m_mu == 0 || m_alpha == 0) {
        throw std::invalid_argument("labels carry zero Schur-Weyl multiplicity");
    }
    return Rational(params.signal_count(), ipow(d, N)) * Rational(m_mu, m_alpha) *
           Rational(hook_length_dimension(alpha), hook_length_dimension(mu));
}

std::vector<SpectrumEntry> mpbt_spectrum(const ProtocolParams& params) {
    const int N = params.ports, k = params.teleported, d = params.local_dim;
    std::vector<SpectrumEntry> out;
    for (const YoungDiagram& alpha : partitions_of(N - k, d)) {
        const std::int64_t m_alpha = weyl_multiplicity(alpha, d);
        for (const YoungDiagram& mu : partitions_of(N, d)) {
            if (!mu.contains(alpha)) continue;
            const std::int64_t paths = path_count(mu, alpha, d);
            out.push_back({alpha, mu, mpbt_eigenvalue(params, alpha, mu),
                           checked_mul(paths, checked_mul(m_alpha, hook_length_dimension(mu)))});
        }
    }
    return out;
}

Rational spectrum_trace(const std::vector<SpectrumEntry>& spectrum) {
    Rational total(0);
    for (const SpectrumEntry& e : spectrum) {
        total += e.eigenvalue * Rational(e.multiplicity);
    }
    return total;
}

namespace detail {

double fidelity_sum(int N, int k, int d) {
    double total = 0.0;
    for (const YoungDiagram& alpha : partitions_of(N - k, d)) {
        std::vector<double> terms;
        for (const YoungDiagram& mu : partitions_of(N, d)) {
            if (!mu.contains(alpha)) continue;
            const double paths = static_cast<double>(path_count(mu, alpha, d));
            const double md = static_cast<double>(
                checked_mul(weyl_multiplicity(mu, d), hook_length_dimension(mu)));
            terms.push_back(paths * std::sqrt(md));
        }
        // cross-term expansion accumulated largest-first
        std::vector<double> products;
        products.reserve(terms.size() * terms.size());
        for (double a : terms) {
            for (double b : terms) products.push_back(a * b);
        }
        std::sort(products.begin(), products.end(), std::greater<>());
        double alpha_sum = 0.0;
        for (double p : products) alpha_sum += p;
        total += alpha_sum;
    }
    return total / static_cast<double>(ipow(d, N + 2 * k));
}

double pbt_fidelity(int N, int d) {
    double total = 0.0;
    for (const YoungDiagram& alpha : partitions_of(N - 1, d)) {
        double inner = 0.0;
        for (const YoungDiagram& mu : add_box(alpha, d)) {
            inner += std::sqrt(static_cast<double>(
                checked_mul(weyl_multiplicity(mu, d), hook_length_dimension(mu))));
        }
        total += inner * inner;
    }
    return total / static_cast<double>(ipow(d, N + 2));
}

std::size_t min_ratio_index(const std::vector<Rational>& ratios) {
    if (ratios.empty()) throw std::invalid_argument("empty ratio list");
    std::size_t best = 0;
    for (std::size_t i = 1; i < ratios.size(); ++i) {
        if (ratios[i] < ratios[best]) best = i;
    }
    return best;
}

}  // namespace detail

double entanglement_fidelity(const ProtocolParams& params) {
    return detail::fidelity_sum(params.ports, params.teleported, params.local_dim);
}

std::vector<FidelityTerm> fidelity_breakdown(const ProtocolParams& params) {
    const int N = params.ports, k = params.teleported, d = params.local_dim;
    const double denom = static_cast<double>(ipow(d, N + 2 * k));
    std::vector<FidelityTerm> out;
    for (const YoungDiagram& alpha : partitions_of(N - k, d)) {
        double weight = 0.0;
        for (const YoungDiagram& mu : partitions_of(N, d)) {
            if (!mu.contains(alpha)) continue;
            weight += static_cast<double>(path_count(mu, alpha, d)) *
                      std::sqrt(static_cast<double>(
                          checked_mul(weyl_multiplicity(mu, d), hook_length_dimension(mu))));
        }
        out.push_back({alpha, weight, weight * weight / denom});
    }
    return out;
}

SuccessProbability success_probability(const ProtocolParams& params) {
    const int N = params.ports, k = params.teleported, d = params.local_dim;
    SuccessProbability result;
    result.value = Rational(0);
    const Rational prefactor(params.signal_count(), ipow(d, 2 * N));
    for (const YoungDiagram& alpha : partitions_of(N - k, d)) {
        const Rational weight(
            checked_mul(weyl_multiplicity(alpha, d), hook_length_dimension(alpha)));
        std::vector<YoungDiagram> mus;
        std::vector<Rational> ratios;
        for (const YoungDiagram& mu : partitions_of(N, d)) {
            if (!mu.contains(alpha)) continue;
            mus.push_back(mu);
            ratios.push_back(weight / mpbt_eigenvalue(params, alpha, mu));
        }
        const std::size_t pick = detail::min_ratio_index(ratios);
        result.terms.push_back({alpha, mus[pick], ratios[pick]});
        result.value += prefactor * ratios[pick];
    }
    return result;
}

ProtocolComparison compare_protocols(int N, int k, int d) {
    const ProtocolParams multi(N, k, d);
    const ProtocolParams bigport(N, 1, static_cast<int>(ipow(d, k)));
    return {entanglement_fidelity(multi), entanglement_fidelity(bigport),
            success_probability(multi).value, success_probability(bigport).value};
}

PerformanceReport evaluate(const ProtocolParams& params) {
    return {params, entanglement_fidelity(params), success_probability(params).value,
            mpbt_spectrum(params)};
}

}  // namespace mpbt
