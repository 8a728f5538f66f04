#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>

#include "mpbt/operators.hpp"
#include "mpbt/site_operator.hpp"

using namespace mpbt;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_CASE("permutation operators") {
    CHECK(max_abs(permutation_operator(Permutation::identity(3), 2).mat -
                  Eigen::MatrixXcd::Identity(8, 8)) == 0.0);

    // the swap gate
    const SiteOperator swap = permutation_operator(Permutation::transposition(2, 0, 1), 2);
    Eigen::MatrixXcd expected(4, 4);
    expected << 1, 0, 0, 0,
                0, 0, 1, 0,
                0, 1, 0, 0,
                0, 0, 0, 1;
    CHECK(max_abs(swap.mat - expected) == 0.0);

    // homomorphism on three qubits
    const Permutation a = Permutation::transposition(3, 0, 1);
    const Permutation b = Permutation::transposition(3, 1, 2);
    CHECK(max_abs(permutation_operator(a, 2).mat * permutation_operator(b, 2).mat -
                  permutation_operator(a * b, 2).mat) == 0.0);

    CHECK_THROWS_AS(permutation_operator(Permutation::identity(13), 2), DimensionCapError);
}

TEST_CASE("partial transpose") {
    const SiteOperator swap = permutation_operator(Permutation::transposition(2, 0, 1), 2);
    const SiteOperator swap_t2 = partial_transpose(swap, {1});

    // transposing one leg of the swap gives twice the entangled projector
    Eigen::MatrixXcd ent(4, 4);
    ent << 1, 0, 0, 1,
           0, 0, 0, 0,
           0, 0, 0, 0,
           1, 0, 0, 1;
    CHECK(max_abs(swap_t2.mat - ent) == 0.0);
    CHECK(swap_t2.mat.trace().real() == doctest::Approx(2.0));
    CHECK(swap.mat.trace().real() == doctest::Approx(2.0));

    // involution
    CHECK(max_abs(partial_transpose(swap_t2, {1}).mat - swap.mat) == 0.0);

    // (d P+)^2 = d (d P+)
    CHECK(max_abs(swap_t2.mat * swap_t2.mat - 2.0 * swap_t2.mat) < 1e-14);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    SiteOperator x = zero_operator(2, 3);
    for (long i = 0; i < 8; ++i) {
        for (long j = 0; j < 8; ++j) x.mat(i, j) = std::complex<double>(u(rng), u(rng));
    }
    CHECK(max_abs(partial_transpose(partial_transpose(x, {0, 2}), {0, 2}).mat - x.mat) == 0.0);
}

TEST_CASE("partial trace") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    SiteOperator x = zero_operator(2, 3);
    for (long i = 0; i < 8; ++i) {
        for (long j = 0; j < 8; ++j) x.mat(i, j) = std::complex<double>(u(rng), u(rng));
    }
    const SiteOperator full = partial_trace(x, {0, 1, 2});
    CHECK(full.dim() == 1);
    CHECK(std::abs(full.mat(0, 0) - x.mat.trace()) < 1e-14);

    // tracing in two steps agrees with one step
    const SiteOperator two_step = partial_trace(partial_trace(x, {2}), {0});
    const SiteOperator one_step = partial_trace(x, {0, 2});
    CHECK(max_abs(two_step.mat - one_step.mat) < 1e-14);

    // trace of a kron factors
    const SiteOperator idop = identity_operator(2, 1);
    const SiteOperator prod = kron(x, idop);
    CHECK(max_abs(partial_trace(prod, {3}).mat - 2.0 * x.mat) < 1e-14);
}

TEST_CASE("partially transposed swap chain") {
    // k = 1: d P+ on the last pair of sites
    const ProtocolParams p312(3, 1, 2);
    const SiteOperator vk1 = v_k_operator(p312);
    const SiteOperator swap_last =
        permutation_operator(Permutation::transposition(4, 2, 3), 2);
    CHECK(max_abs(vk1.mat - partial_transpose(swap_last, {3}).mat) == 0.0);

    // k = 2 wiring: site n-2k+j pairs with site n-j+1, transposed legs last
    const ProtocolParams p422(4, 2, 2);
    const SiteOperator vk2 = v_k_operator(p422);
    const SiteOperator w36 = partial_transpose(
        permutation_operator(Permutation::transposition(6, 2, 5), 2), {5});
    const SiteOperator w45 = partial_transpose(
        permutation_operator(Permutation::transposition(6, 3, 4), 2), {4});
    CHECK(max_abs(vk2.mat - w36.mat * w45.mat) == 0.0);

    // idempotence scale: (V^(k))^2 = d^k V^(k)
    CHECK(max_abs(vk2.mat * vk2.mat - 4.0 * vk2.mat) < 1e-12);

    // sandwich identity with a random operator on the port block
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int d : {2, 3}) {
        const ProtocolParams params(4, 2, d);
        const SiteOperator vk = v_k_operator(params);
        SiteOperator x = zero_operator(d, 4);
        for (long i = 0; i < x.dim(); ++i) {
            for (long j = 0; j < x.dim(); ++j) x.mat(i, j) = std::complex<double>(u(rng), u(rng));
        }
        const SiteOperator xt = partial_trace(x, {2, 3});
        const Eigen::MatrixXcd lhs = vk.mat * embed_front(x, 6).mat * vk.mat;
        const Eigen::MatrixXcd rhs = embed_front(xt, 6).mat * vk.mat;
        CHECK(max_abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("signal states") {
    const ProtocolParams params(3, 1, 2);
    const SiteOperator vk = v_k_operator(params);

    // the reference tuple reproduces V^(k) / d^N bit for bit
    const SiteOperator sigma0 = signal_state(canonical_tuple(params), params);
    CHECK(max_abs(sigma0.mat - vk.mat / 8.0) == 0.0);

    for (const auto& tuple : port_tuples(3, 1)) {
        const SiteOperator sigma = signal_state(tuple, params);
        CHECK(sigma.mat.trace().real() == doctest::Approx(1.0));
        CHECK(max_abs(sigma.mat - sigma.mat.adjoint()) == 0.0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sigma.mat, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() > -1e-14);
    }

    // covariance under relabelling the ports
    std::mt19937 rng(17);
    const std::vector<int> perm_img = {2, 0, 1};
    const Permutation tau = Permutation{std::vector<int>(perm_img)}.embedded(4);
    for (const auto& tuple : port_tuples(3, 1)) {
        std::vector<int> mapped(tuple.size());
        for (std::size_t l = 0; l < tuple.size(); ++l) mapped[l] = tau(tuple[l]);
        CHECK(max_abs(conjugate_by_permutation(signal_state(tuple, params), tau).mat -
                      signal_state(mapped, params).mat) == 0.0);
    }

    CHECK_THROWS_AS(signal_state({0, 0}, ProtocolParams(4, 2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(signal_state({5}, params), std::invalid_argument);
}

TEST_CASE("teleportation operator") {
    const ProtocolParams params(2, 1, 2);
    const SiteOperator rho = mpbt_operator(params);
    CHECK(rho.mat.trace().real() == doctest::Approx(2.0));

    CHECK(max_abs(mpbt_operator_from_signals(params).mat -
                  mpbt_operator_from_coset(params).mat) == 0.0);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd evals = es.eigenvalues();
    REQUIRE(evals.size() == 8);
    // {0 x4, 1/4 x2, 3/4 x2} ascending
    for (int i = 0; i < 4; ++i) CHECK(std::abs(evals(i)) < 1e-12);
    CHECK(evals(4) == doctest::Approx(0.25));
    CHECK(evals(5) == doctest::Approx(0.25));
    CHECK(evals(6) == doctest::Approx(0.75));
    CHECK(evals(7) == doctest::Approx(0.75));

    for (int d : {2, 3}) {
        for (int N = 2; N <= 4; ++N) {
            for (int k = 1; k <= N / 2; ++k) {
                const ProtocolParams q(N, k, d);
                const SiteOperator r = mpbt_operator(q);
                CHECK(r.mat.trace().real() ==
                      doctest::Approx(static_cast<double>(q.signal_count())));
            }
        }
    }
}

TEST_CASE("matrix units of the Schur decomposition") {
    const int d = 2, n = 3;
    const YoungDiagram mu({2, 1});
    const YoungOrthogonalRep& rep = cached_rep(mu);

    // defining sum, evaluated independently with explicit inverses
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            SiteOperator direct = zero_operator(d, n);
            for (const Permutation& tau : all_permutations(n)) {
                const double coeff = rep.matrix(tau.inverse())(j, i);
                direct.mat += coeff * permutation_operator(tau, d).mat;
            }
            direct.mat *= rep.dimension() / 6.0;
            CHECK(max_abs(direct.mat - e_operator(mu, i, j, 3, d).mat) < 1e-13);
        }
    }

    // composition, trace and action rules across all shapes on three qubits
    const std::vector<YoungDiagram> shapes = partitions_of(n, d);
    SiteOperator completeness = zero_operator(d, n);
    for (const YoungDiagram& a : shapes) {
        const int da = static_cast<int>(hook_length_dimension(a));
        const std::int64_t mult = weyl_multiplicity(a, d);
        for (int i = 0; i < da; ++i) {
            completeness.mat += e_operator(a, i, i, n, d).mat;
            for (int j = 0; j < da; ++j) {
                const SiteOperator eij = e_operator(a, i, j, n, d);
                CHECK(std::abs(eij.mat.trace().real() -
                               (i == j ? static_cast<double>(mult) : 0.0)) < 1e-12);
                for (const YoungDiagram& b : shapes) {
                    const int db = static_cast<int>(hook_length_dimension(b));
                    for (int k = 0; k < db; ++k) {
                        for (int l = 0; l < db; ++l) {
                            Eigen::MatrixXcd prod =
                                eij.mat * e_operator(b, k, l, n, d).mat;
                            if (a == b && j == k) prod -= e_operator(a, i, l, n, d).mat;
                            CHECK(max_abs(prod) < 1e-12);
                        }
                    }
                }
            }
        }
    }
    CHECK(max_abs(completeness.mat - Eigen::MatrixXcd::Identity(8, 8)) < 1e-12);

    const Permutation sigma({1, 2, 0});
    const SiteOperator vs = permutation_operator(sigma, d);
    const Eigen::MatrixXd phi = rep.matrix(sigma);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Eigen::MatrixXcd left = e_operator(mu, i, j, n, d).mat * vs.mat;
            Eigen::MatrixXcd right = vs.mat * e_operator(mu, i, j, n, d).mat;
            for (int k = 0; k < 2; ++k) {
                left -= phi(j, k) * e_operator(mu, i, k, n, d).mat;
                right -= phi(k, i) * e_operator(mu, k, j, n, d).mat;
            }
            CHECK(max_abs(left) < 1e-12);
            CHECK(max_abs(right) < 1e-12);
        }
    }

    CHECK_THROWS_AS(e_operator(mu, 0, 0, 4, d), std::invalid_argument);
    CHECK_THROWS_AS(e_operator(YoungDiagram({5, 4}), 0, 0, 9, 2), DimensionCapError);
}

TEST_CASE("Young projectors") {
    const int d = 2;
    SiteOperator sum = zero_operator(d, 3);
    for (const YoungDiagram& mu : partitions_of(3)) {
        const SiteOperator p = young_projector(mu, 3, d);
        sum.mat += p.mat;
        CHECK(max_abs(p.mat * p.mat - p.mat) < 1e-12);
        const double expect =
            static_cast<double>(checked_mul(weyl_multiplicity(mu, d), hook_length_dimension(mu)));
        CHECK(p.mat.trace().real() == doctest::Approx(expect));
    }
    CHECK(max_abs(sum.mat - Eigen::MatrixXcd::Identity(8, 8)) < 1e-12);

    CHECK(young_projector(YoungDiagram({2, 1}), 3, 2).mat.trace().real() ==
          doctest::Approx(4.0));
    CHECK(max_abs(young_projector(YoungDiagram({1, 1, 1}), 3, 2).mat) < 1e-12);
}

TEST_CASE("single-layer trace of matrix units") {
    // tr_last E^mu with both indices split at the layer below
    const int d = 2;
    const YoungDiagram mu({2, 1});
    const YoungOrthogonalRep& rep = cached_rep(mu);
    const auto blocks = rep.restriction_blocks(2);
    for (const auto& ba : blocks) {
        const std::int64_t m_beta = weyl_multiplicity(ba.sub, d);
        for (const auto& bb : blocks) {
            const SiteOperator traced =
                partial_trace(e_operator(mu, ba.begin, bb.begin, 3, d), {2});
            Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
            if (ba.sub == bb.sub) {
                expect = (2.0 / m_beta) * e_operator(ba.sub, 0, 0, 2, d).mat;
            }
            CHECK(max_abs(traced.mat - expect) < 1e-12);
        }
    }
}

TEST_CASE("ideal basis at the smallest point") {
    const ProtocolParams params(2, 1, 2);
    const IdealBasis basis(params);
    const auto labels = basis.elements();
    REQUIRE(labels.size() == 4);  // two one-dimensional blocks, two indices each

    std::vector<SiteOperator> ops;
    for (const auto& e : labels) ops.push_back(basis.element_operator(e));

    // composition rule across the full pairwise table
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = 0; b < labels.size(); ++b) {
            Eigen::MatrixXcd prod = ops[a].mat * ops[b].mat;
            if (labels[a].path_nu == labels[b].path_mu && labels[a].j == labels[b].i) {
                for (std::size_t c = 0; c < labels.size(); ++c) {
                    if (labels[c].mu == labels[a].mu && labels[c].nu == labels[b].nu &&
                        labels[c].path_mu == labels[a].path_mu &&
                        labels[c].path_nu == labels[b].path_nu && labels[c].i == labels[a].i &&
                        labels[c].j == labels[b].j) {
                        prod -= ops[c].mat;
                    }
                }
            }
            CHECK(max_abs(prod) < 1e-12);
        }
    }

    // eigenprojector traces: paths * m_alpha * d_mu
    const SiteOperator f2 = basis.projector(YoungDiagram({2}), YoungDiagram({1}));
    CHECK(f2.mat.trace().real() == doctest::Approx(2.0));
    const SiteOperator f11 = basis.projector(YoungDiagram({1, 1}), YoungDiagram({1}));
    CHECK(f11.mat.trace().real() == doctest::Approx(2.0));
    CHECK(max_abs(f2.mat * f2.mat - f2.mat) < 1e-12);
    CHECK(max_abs(f2.mat * f11.mat) < 1e-12);

    // eigenvalue equations against the closed form
    const SiteOperator rho = mpbt_operator(params);
    CHECK(max_abs(rho.mat * f2.mat - 0.75 * f2.mat) < 1e-12);
    CHECK(max_abs(rho.mat * f11.mat - 0.25 * f11.mat) < 1e-12);
}
