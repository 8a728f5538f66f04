#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "mpbt/verify.hpp"
#include "verify_internal.hpp"

namespace mpbt {

using detail::max_abs;

namespace {

std::string point_tag(const ProtocolParams& p) {
    std::ostringstream os;
    os << "[N=" << p.ports << ",k=" << p.teleported << ",d=" << p.local_dim << "]";
    return os.str();
}

struct EigenSystem {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};

EigenSystem hermitian_eigensystem(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double max_eigenvalue(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

/// Distinct exact eigenvalues with their total multiplicities, kernel
/// included.
std::map<Rational, std::int64_t> grouped_spectrum(const ProtocolParams& params, long dim) {
    std::map<Rational, std::int64_t> groups;
    std::int64_t rank = 0;
    for (const SpectrumEntry& e : mpbt_spectrum(params)) {
        groups[e.eigenvalue] += e.multiplicity;
        rank += e.multiplicity;
    }
    if (dim > rank) groups[Rational(0)] += dim - rank;
    return groups;
}

/// Maximally entangled pair projectors for one outcome tuple, times d^k:
/// the 0/1 pattern the signal states are built from.
SiteOperator tuple_pattern(const std::vector<int>& tuple, const ProtocolParams& params,
                           long cap) {
    SiteOperator sigma = signal_state(tuple, params, cap);
    sigma.mat *= static_cast<double>(ipow(params.local_dim, params.ports));
    return sigma;
}

}  // namespace

bool SdpReport::feasible(double tol) const {
    return theta_min_eigenvalue >= -tol && primal_max_eigenvalue <= 1.0 + tol &&
           omega_min_eigenvalue >= -tol && dual_trace_residual <= tol &&
           primal_vs_formula <= tol && dual_vs_formula <= tol;
}

SrmReport srm_fidelity(const ProtocolParams& params, long cap) {
    const int N = params.ports, k = params.teleported, d = params.local_dim;
    const int n = params.total_sites();
    const long dim = site_space_dim(d, n, cap);
    SrmReport report;

    const SiteOperator rho = mpbt_operator(params, cap);
    const EigenSystem es = hermitian_eigensystem(rho.mat);
    const double lambda_max = es.values.maxCoeff();
    const double threshold = 1e-10 * lambda_max;

    std::int64_t expected_rank = 0;
    for (const SpectrumEntry& e : mpbt_spectrum(params)) expected_rank += e.multiplicity;
    report.expected_rank = expected_rank;

    long rank = 0;
    for (long i = 0; i < dim; ++i) {
        if (es.values(i) > threshold) ++rank;
    }
    report.support_rank = rank;

    // columns are sorted ascending, the support is the trailing block
    const Eigen::MatrixXcd u = es.vectors.rightCols(rank);
    Eigen::VectorXd inv_roots(rank);
    for (long i = 0; i < rank; ++i) inv_roots(i) = 1.0 / std::sqrt(es.values(dim - rank + i));
    const Eigen::MatrixXcd inv_sqrt = u * inv_roots.asDiagonal() * u.adjoint();
    const Eigen::MatrixXcd support = u * u.adjoint();

    const std::vector<std::vector<int>> tuples = port_tuples(N, k);
    const std::vector<int> base = canonical_tuple(params);
    const double scale = 1.0 / static_cast<double>(ipow(d, 2 * k));

    double total = 0.0;
    double base_term = 0.0;
    for (const auto& tuple : tuples) {
        const SiteOperator sigma = signal_state(tuple, params, cap);
        const std::vector<detail::Triplet> nz = detail::nonzeros(sigma.mat);
        const Eigen::MatrixXcd b = detail::sparse_left_multiply(nz, inv_sqrt);  // sigma_i S
        double term = 0.0;
        for (long x = 0; x < dim; ++x) term += (b.row(x) * b.col(x))(0, 0).real();
        total += term;
        if (tuple == base) base_term = term;
    }
    report.fidelity = scale * total;
    report.fidelity_covariant =
        scale * static_cast<double>(params.signal_count()) * base_term;

    const Eigen::MatrixXcd povm_sum = inv_sqrt * rho.mat * inv_sqrt;
    report.support_residual = max_abs(povm_sum - support);
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::MatrixXcd delta =
        (identity - povm_sum) / static_cast<double>(params.signal_count());
    report.povm_identity_residual =
        max_abs(povm_sum + static_cast<double>(params.signal_count()) * delta - identity);
    return report;
}

namespace {

/// F_mu(alpha) as the Young-projector-filtered spectral projector of the
/// dense operator. Valid whenever lambda_mu(alpha') separates the alpha'
/// reachable from this mu, which is checked exactly first.
Eigen::MatrixXcd spectral_route_projector(const ProtocolParams& params, const YoungDiagram& mu,
                                          const YoungDiagram& alpha, const EigenSystem& es,
                                          const std::map<Rational, std::int64_t>& groups,
                                          long cap) {
    const int N = params.ports, d = params.local_dim, n = params.total_sites();
    const Rational lambda = mpbt_eigenvalue(params, alpha, mu);
    for (const YoungDiagram& beta : partitions_of(N - params.teleported, d)) {
        if (beta == alpha || !mu.contains(beta)) continue;
        if (mpbt_eigenvalue(params, beta, mu) == lambda) {
            throw std::logic_error("eigenvalue collision inside one block; direct route required");
        }
    }
    double gap = std::numeric_limits<double>::infinity();
    const double target = lambda.to_double();
    for (const auto& [value, mult] : groups) {
        if (value == lambda) continue;
        gap = std::min(gap, std::abs(value.to_double() - target));
    }
    const double pick = std::min(1e-6, gap / 4.0);

    const long dim = es.values.size();
    std::vector<long> cluster;
    for (long i = 0; i < dim; ++i) {
        if (std::abs(es.values(i) - target) < pick) cluster.push_back(i);
    }
    if (static_cast<std::int64_t>(cluster.size()) != groups.at(lambda)) {
        throw std::logic_error("dense eigenvalue cluster does not match the formula multiplicity");
    }
    Eigen::MatrixXcd u(dim, cluster.size());
    for (std::size_t c = 0; c < cluster.size(); ++c) u.col(c) = es.vectors.col(cluster[c]);
    const Eigen::MatrixXcd proj = u * u.adjoint();
    const Eigen::MatrixXcd p_mu = embed_front(young_projector(mu, N, d, cap), n, cap).mat;
    return p_mu * proj * p_mu;
}

}  // namespace

SdpReport sdp_check(const ProtocolParams& params, long cap, bool force_spectral_dual) {
    const int N = params.ports, k = params.teleported, d = params.local_dim;
    const int n = params.total_sites();
    const long dim = site_space_dim(d, n, cap);
    SdpReport report;

    const SuccessProbability prob = success_probability(params);
    report.formula = prob.value;
    const double denom = static_cast<double>(ipow(d, N + k));

    // primal: Theta = sum_alpha x_alpha P_alpha at the border value
    SiteOperator theta = zero_operator(d, N - k, cap);
    for (const ProbabilityTerm& term : prob.terms) {
        const Rational x = Rational(ipow(d, k), ipow(d, N)) /
                           mpbt_eigenvalue(params, term.alpha, term.minimizer);
        theta.mat += x.to_double() * young_projector(term.alpha, N - k, d, cap).mat;
    }
    report.theta_min_eigenvalue = min_eigenvalue(theta.mat);

    const SiteOperator vk = v_k_operator(params, cap);
    SiteOperator povm0{embed_front(theta, n, cap).mat * vk.mat /
                           static_cast<double>(ipow(d, k)),
                       d, n};
    SiteOperator povm_sum = zero_operator(d, n, cap);
    double trace_sum = 0.0;
    for (const Permutation& g : coset_transversal(N, N - k)) {
        const SiteOperator term = conjugate_by_permutation(povm0, g.embedded(n));
        povm_sum.mat += term.mat;
        trace_sum += term.mat.trace().real();
    }
    report.primal_max_eigenvalue = max_eigenvalue(povm_sum.mat);
    report.primal_value = trace_sum / denom;
    report.primal_vs_formula = std::abs(report.primal_value - prob.value.to_double());

    // dual: Omega = sum_alpha d^k / (paths * m_mu*) * m_alpha * F_mu*(alpha)
    const SiteOperator rho = mpbt_operator(params, cap);
    Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(dim, dim);
    const bool direct = dim <= 256 && !force_spectral_dual;
    EigenSystem es;
    std::map<Rational, std::int64_t> groups;
    std::unique_ptr<IdealBasis> basis;
    if (direct) {
        basis = std::make_unique<IdealBasis>(params, cap);
    } else {
        es = hermitian_eigensystem(rho.mat);
        groups = grouped_spectrum(params, dim);
    }
    for (const ProbabilityTerm& term : prob.terms) {
        const double weight =
            static_cast<double>(ipow(d, k)) * weyl_multiplicity(term.alpha, d) /
            (static_cast<double>(path_count(term.minimizer, term.alpha, d)) *
             weyl_multiplicity(term.minimizer, d));
        const Eigen::MatrixXcd f_proj =
            direct ? basis->projector(term.minimizer, term.alpha).mat
                   : spectral_route_projector(params, term.minimizer, term.alpha, es, groups, cap);
        omega += weight * f_proj;
    }
    report.omega_min_eigenvalue = min_eigenvalue(omega);
    report.dual_value = omega.trace().real() / denom;
    report.dual_vs_formula = std::abs(report.dual_value - prob.value.to_double());

    // second dual constraint: tr_{A_i C}(P+ Omega) = identity, every tuple
    double trace_residual = 0.0;
    for (const std::vector<int>& tuple : port_tuples(N, k)) {
        SiteOperator pplus = tuple_pattern(tuple, params, cap);
        pplus.mat /= static_cast<double>(ipow(d, k));
        const std::vector<detail::Triplet> nz = detail::nonzeros(pplus.mat);
        const Eigen::MatrixXcd prod = detail::sparse_left_multiply(nz, omega);
        std::vector<int> traced(tuple);
        for (int l = 0; l < k; ++l) traced.push_back(N + l);
        const SiteOperator reduced = partial_trace(SiteOperator{prod, d, n}, traced);
        trace_residual = std::max(
            trace_residual,
            max_abs(reduced.mat - Eigen::MatrixXcd::Identity(reduced.dim(), reduced.dim())));
    }
    report.dual_trace_residual = trace_residual;
    return report;
}

CheckResult spectral_decomposition_check(const ProtocolParams& params, long cap) {
    const long dim = site_space_dim(params.local_dim, params.total_sites(), cap);
    const SiteOperator rho = mpbt_operator(params, cap);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.mat, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd evals = solver.eigenvalues();

    const std::map<Rational, std::int64_t> groups = grouped_spectrum(params, dim);
    std::vector<double> targets;
    std::vector<std::int64_t> expected_counts;
    for (const auto& [value, mult] : groups) {
        targets.push_back(value.to_double());
        expected_counts.push_back(mult);
    }

    std::vector<std::int64_t> counts(targets.size(), 0);
    double residual = 0.0;
    for (long i = 0; i < dim; ++i) {
        std::size_t best = 0;
        for (std::size_t t = 1; t < targets.size(); ++t) {
            if (std::abs(evals(i) - targets[t]) < std::abs(evals(i) - targets[best])) best = t;
        }
        ++counts[best];
        residual = std::max(residual, std::abs(evals(i) - targets[best]));
    }
    if (counts != expected_counts) residual = 1.0;

    // exact trace identity on the formula side
    const Rational trace_gap =
        spectrum_trace(mpbt_spectrum(params)) - Rational(params.signal_count());
    if (!trace_gap.is_zero()) residual = 1.0;

    return make_check("spectral_decomposition" + point_tag(params), residual, 1e-10);
}

}  // namespace mpbt
