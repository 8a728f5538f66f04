#pragma once

#include <string>
#include <vector>

#include "mpbt/operators.hpp"
#include "mpbt/protocol.hpp"

namespace mpbt {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

CheckResult make_check(std::string name, double residual, double tolerance);

/// Square-root-measurement evaluation of the deterministic protocol on the
/// dense space: POVMs rho^{-1/2} sigma_i rho^{-1/2} plus the completion term.
struct SrmReport {
    double fidelity = 0.0;            // (1/d^{2k}) sum_i tr(Pi_i sigma_i)
    double fidelity_covariant = 0.0;  // |I|/d^{2k} tr(Pi_{i0} sigma_{i0})
    double povm_identity_residual = 0.0;  // || sum_i Pi_i + |I| Delta - 1 ||
    double support_residual = 0.0;        // || sum_i Pi_i - support projector ||
    long support_rank = 0;
    std::int64_t expected_rank = 0;  // total multiplicity of the formula spectrum
};
SrmReport srm_fidelity(const ProtocolParams& params, long cap = kDefaultDimCap);

/// Feasibility audit of the analytic optimum of the probabilistic protocol:
/// primal POVMs from the Young-projector ansatz at the border value, dual
/// certificate from the ideal eigenprojectors.
struct SdpReport {
    Rational formula;                 // closed-form success probability
    double primal_value = 0.0;        // d^{-(N+k)} sum_i tr Pi_i
    double dual_value = 0.0;          // d^{-(N+k)} tr Omega
    double theta_min_eigenvalue = 0.0;
    double primal_max_eigenvalue = 0.0;    // largest eigenvalue of sum_i Pi_i
    double omega_min_eigenvalue = 0.0;
    double dual_trace_residual = 0.0;      // max_i || tr_{A_i C}(P+ Omega) - 1 ||
    double primal_vs_formula = 0.0;
    double dual_vs_formula = 0.0;

    bool feasible(double tol = 1e-10) const;
};
/// The dual certificate is assembled from the ideal basis product form at
/// small dimension and from Young-projector-filtered spectral projectors of
/// the dense operator otherwise; force_spectral_dual picks the second route
/// regardless of size.
SdpReport sdp_check(const ProtocolParams& params, long cap = kDefaultDimCap,
                    bool force_spectral_dual = false);

/// Dense eigendecomposition of the teleportation operator against the
/// closed-form spectrum: eigenvalues to 1e-10, multiplicities exactly, trace
/// identity exactly in rational arithmetic.
CheckResult spectral_decomposition_check(const ProtocolParams& params, long cap = kDefaultDimCap);

/// Named identity checks for the operator algebra at one protocol point.
std::vector<CheckResult> operator_identity_suite(const ProtocolParams& params, unsigned seed,
                                                 long cap = kDefaultDimCap);

/// Symmetric-group identities alone: orthogonality of the Young orthogonal
/// form for n <= max_n, the transversal bilinear sum rule for subgroups
/// S(n-1), S(n-2), and the Schur-Weyl dimension count for n <= 8, d in {2,3}.
std::vector<CheckResult> rep_theory_suite(int max_n = 5);

struct VerifyOptions {
    long max_dim = kDefaultDimCap;  // grid bound on d^{N+k}
    long heavy_dim = 1024;          // bound for eigendecomposition-backed checks
    unsigned seed = 12345;
};

/// The full suite: representation theory, operator identities at the pinned
/// points, and per-point oracle equivalence over the (N, k, d) grid.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace mpbt
