#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpbt/verify.hpp"

using namespace mpbt;

namespace {

void require_all(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks) {
        INFO(c.name, " residual=", c.residual, " tol=", c.tolerance);
        CHECK(c.passed);
    }
}

}  // namespace

TEST_CASE("representation theory suite") { require_all(rep_theory_suite(4)); }

TEST_CASE("operator identities at two ports") {
    require_all(operator_identity_suite(ProtocolParams(2, 1, 2), 99, kDefaultDimCap));
}

TEST_CASE("operator identities at three ports") {
    require_all(operator_identity_suite(ProtocolParams(3, 1, 2), 99, kDefaultDimCap));
}

TEST_CASE("operator identities for qutrits") {
    require_all(operator_identity_suite(ProtocolParams(2, 1, 3), 99, kDefaultDimCap));
}

TEST_CASE("spectral decomposition matches the dense operator") {
    for (const auto& [N, k, d] :
         std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {3, 1, 2}, {4, 2, 2}, {2, 1, 3}}) {
        const CheckResult c = spectral_decomposition_check(ProtocolParams(N, k, d));
        INFO(c.name, " residual=", c.residual);
        CHECK(c.passed);
    }
}

TEST_CASE("square-root measurement fidelity") {
    const SrmReport r = srm_fidelity(ProtocolParams(2, 1, 2));
    const double expected = (4.0 + 2.0 * std::sqrt(3.0)) / 16.0;
    CHECK(r.fidelity == doctest::Approx(expected).epsilon(1e-11));
    CHECK(r.fidelity_covariant == doctest::Approx(r.fidelity).epsilon(1e-11));
    CHECK(r.povm_identity_residual < 1e-10);
    CHECK(r.support_residual < 1e-10);
    CHECK(r.support_rank == 4);
    CHECK(r.expected_rank == 4);

    const SrmReport r31 = srm_fidelity(ProtocolParams(3, 1, 2));
    CHECK(r31.fidelity == doctest::Approx(0.625).epsilon(1e-11));
    CHECK(r31.support_rank == r31.expected_rank);
}

TEST_CASE("analytic optimum is primal and dual feasible") {
    const SdpReport r = sdp_check(ProtocolParams(2, 1, 2));
    CHECK(r.formula == Rational(1, 3));
    CHECK(r.primal_value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(r.dual_value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(r.feasible(1e-10));
    CHECK(r.primal_max_eigenvalue <= 1.0 + 1e-10);
    CHECK(r.omega_min_eigenvalue >= -1e-10);
    CHECK(r.dual_trace_residual < 1e-10);

    const SdpReport r42 = sdp_check(ProtocolParams(4, 2, 2));
    CHECK(r42.formula == Rational(7, 40));
    CHECK(r42.feasible(1e-10));
}

TEST_CASE("dual certificate routes agree") {
    // the spectral-projector assembly must reproduce the direct product form
    for (const auto& [N, k, d] :
         std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {3, 1, 2}, {4, 2, 2}}) {
        const ProtocolParams params(N, k, d);
        const SdpReport direct = sdp_check(params);
        CHECK(direct.feasible(1e-10));
        CHECK(std::abs(direct.primal_value - direct.dual_value) < 1e-10);

        const SdpReport spectral = sdp_check(params, kDefaultDimCap, true);
        CHECK(spectral.feasible(1e-10));
        CHECK(std::abs(spectral.dual_value - direct.dual_value) < 1e-10);
        CHECK(std::abs(spectral.dual_trace_residual) < 1e-10);
    }
}
