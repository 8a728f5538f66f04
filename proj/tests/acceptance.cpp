// Acceptance suite: oracle-equivalence and closed-form property checks over
// the full desk-scale grid, one summary line per criterion.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mpbt/protocol.hpp"
#include "mpbt/verify.hpp"

using namespace mpbt;

namespace {

const std::vector<ProtocolParams> kGrid = {
    {2, 1, 2}, {3, 1, 2}, {4, 1, 2}, {4, 2, 2}, {5, 1, 2}, {5, 2, 2},
    {6, 2, 2}, {6, 3, 2}, {8, 2, 2}, {2, 1, 3}, {3, 1, 3}, {4, 2, 3},
};

struct Criterion {
    std::string label;
    bool passed = true;
    std::string detail;
};

std::string point(const ProtocolParams& p) {
    return "(" + std::to_string(p.ports) + "," + std::to_string(p.teleported) + "," +
           std::to_string(p.local_dim) + ")";
}

Criterion criterion_fidelity_vs_oracle() {
    Criterion c{"fidelity formula vs square-root-measurement oracle"};
    double worst = 0.0;
    for (const ProtocolParams& params : kGrid) {
        const double formula = entanglement_fidelity(params);
        const SrmReport srm = srm_fidelity(params);
        const double rel = std::abs(srm.fidelity - formula) / formula;
        worst = std::max(worst, rel);
        if (rel > 1e-9) {
            c.passed = false;
            c.detail += " " + point(params) + " rel dev " + std::to_string(rel);
        }
        if (std::abs(srm.fidelity - srm.fidelity_covariant) > 1e-10 ||
            srm.povm_identity_residual > 1e-10) {
            c.passed = false;
            c.detail += " " + point(params) + " srm internal inconsistency";
        }
    }
    if (c.passed) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max rel dev %.2e over %zu points", worst, kGrid.size());
        c.detail = buf;
    }
    return c;
}

Criterion criterion_probability_vs_oracle() {
    Criterion c{"probability formula vs POVM traces and SDP feasibility"};
    double worst = 0.0;
    for (const ProtocolParams& params : kGrid) {
        const SdpReport sdp = sdp_check(params);
        worst = std::max({worst, sdp.primal_vs_formula, sdp.dual_vs_formula,
                          sdp.dual_trace_residual});
        if (sdp.primal_vs_formula > 1e-10 || sdp.dual_vs_formula > 1e-10) {
            c.passed = false;
            c.detail += " " + point(params) + " value mismatch";
        }
        if (!sdp.feasible(1e-10)) {
            c.passed = false;
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          " %s infeasible (theta %.2e, primal max %.10f, omega %.2e, dual tr %.2e)",
                          point(params).c_str(), sdp.theta_min_eigenvalue,
                          sdp.primal_max_eigenvalue, sdp.omega_min_eigenvalue,
                          sdp.dual_trace_residual);
            c.detail += buf;
        }
    }
    if (c.passed) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max residual %.2e over %zu points", worst, kGrid.size());
        c.detail = buf;
    }
    return c;
}

Criterion criterion_spectral_theorem() {
    Criterion c{"dense spectral decomposition and exact trace identity"};
    double worst = 0.0;
    for (const ProtocolParams& params : kGrid) {
        const CheckResult r = spectral_decomposition_check(params);
        worst = std::max(worst, r.residual);
        if (!r.passed) {
            c.passed = false;
            c.detail += " " + r.name;
        }
    }
    if (c.passed) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max eigenvalue dev %.2e over %zu points", worst,
                      kGrid.size());
        c.detail = buf;
    }
    return c;
}

Criterion criterion_operator_identity_suite() {
    Criterion c{"operator-algebra identity suite at the pinned points"};
    double worst = 0.0;
    std::size_t count = 0;
    for (const ProtocolParams& params :
         {ProtocolParams{2, 1, 2}, ProtocolParams{3, 1, 2}, ProtocolParams{4, 2, 2}}) {
        for (const CheckResult& r : operator_identity_suite(params, 20177, kDefaultDimCap)) {
            ++count;
            worst = std::max(worst, r.residual);
            if (!r.passed) {
                c.passed = false;
                c.detail += " " + r.name;
            }
        }
    }
    if (c.passed) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "%zu named checks, max residual %.2e", count, worst);
        c.detail = buf;
    }
    return c;
}

Criterion criterion_rep_theory() {
    Criterion c{"orthogonality, bilinear sum rule and dimension count"};
    double worst = 0.0;
    std::size_t count = 0;
    for (const CheckResult& r : rep_theory_suite(5)) {
        ++count;
        worst = std::max(worst, r.residual);
        if (!r.passed) {
            c.passed = false;
            c.detail += " " + r.name;
        }
    }
    if (c.passed) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "%zu named checks, max residual %.2e", count, worst);
        c.detail = buf;
    }
    return c;
}

Criterion criterion_known_values() {
    Criterion c{"known-value anchors and single-system reduction"};
    const double f212 = entanglement_fidelity(ProtocolParams(2, 1, 2));
    const double expected = (4.0 + 2.0 * std::sqrt(3.0)) / 16.0;
    if (std::abs(f212 - expected) > 1e-12) {
        c.passed = false;
        c.detail += " F(2,1,2) != (4+2sqrt(3))/16";
    }
    if (success_probability(ProtocolParams(2, 1, 2)).value != Rational(1, 3)) {
        c.passed = false;
        c.detail += " p(2,1,2) != 1/3";
    }
    for (int d : {2, 3, 4}) {
        for (int N = 2; N <= 8; ++N) {
            if (ipow(d, N + 1) > kDefaultDimCap) continue;
            const double multi = entanglement_fidelity(ProtocolParams(N, 1, d));
            const double single = detail::pbt_fidelity(N, d);
            if (std::abs(multi - single) > 1e-13 * single) {
                c.passed = false;
                c.detail += " k=1 reduction fails at N=" + std::to_string(N) +
                            ",d=" + std::to_string(d);
            }
        }
    }
    if (c.passed) c.detail = "F(2,1,2), p(2,1,2) and the k=1 reduction all match";
    return c;
}

Criterion criterion_two_qubit_ordering() {
    Criterion c{"two qubits through qubit ports beat one four-dimensional port"};
    for (int N : {4, 5, 6}) {
        const double multi = entanglement_fidelity(ProtocolParams(N, 2, 2));
        const double bigport = entanglement_fidelity(ProtocolParams(N, 1, 4));
        if (!(multi > bigport)) {
            c.passed = false;
            c.detail += " N=" + std::to_string(N);
        }
    }
    if (c.passed) c.detail = "F(N,2,2) > F(N,1,4) for N in {4,5,6}";
    return c;
}

}  // namespace

int main() {
    const std::vector<Criterion> results = {
        criterion_fidelity_vs_oracle(),   criterion_probability_vs_oracle(),
        criterion_spectral_theorem(),     criterion_operator_identity_suite(),
        criterion_rep_theory(),           criterion_known_values(),
        criterion_two_qubit_ordering(),
    };
    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        if (!c.passed) ++failures;
        std::printf("[%s] criterion %zu: %s (%s)\n", c.passed ? "PASS" : "FAIL", i + 1,
                    c.label.c_str(), c.detail.c_str());
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
