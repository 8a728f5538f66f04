#include "mpbt/verify.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

#include "verify_internal.hpp"

namespace mpbt {

using detail::max_abs;

namespace {

std::string point_tag(const ProtocolParams& p) {
    std::ostringstream os;
    os << "[N=" << p.ports << ",k=" << p.teleported << ",d=" << p.local_dim << "]";
    return os.str();
}

std::vector<int> trace_k_sites(const ProtocolParams& p) {
    // tr_(k): the middle block of ports, sites n-2k .. n-k-1 (0-based)
    std::vector<int> sites;
    const int n = p.total_sites(), k = p.teleported;
    for (int s = n - 2 * k; s < n - k; ++s) sites.push_back(s);
    return sites;
}

std::vector<int> trace_2k_sites(const ProtocolParams& p) {
    std::vector<int> sites;
    const int n = p.total_sites(), k = p.teleported;
    for (int s = n - 2 * k; s < n; ++s) sites.push_back(s);
    return sites;
}

}  // namespace

CheckResult make_check(std::string name, double residual, double tolerance) {
    const bool ok = residual <= tolerance && std::isfinite(residual);
    return {std::move(name), residual, tolerance, ok};
}

std::vector<CheckResult> rep_theory_suite(int max_n) {
    std::vector<CheckResult> out;
    std::mt19937 rng(2357);

    // classical orthogonality of the Young orthogonal form, all index choices
    for (int n = 2; n <= max_n; ++n) {
        const std::vector<YoungDiagram> shapes = partitions_of(n);
        std::vector<const YoungOrthogonalRep*> reps;
        for (const YoungDiagram& mu : shapes) reps.push_back(&cached_rep(mu));
        double residual = 0.0;
        for (std::size_t a = 0; a < reps.size(); ++a) {
            for (std::size_t b = a; b < reps.size(); ++b) {
                const int dm = reps[a]->dimension(), dn = reps[b]->dimension();
                std::vector<Eigen::MatrixXd> sums(dm * dm, Eigen::MatrixXd::Zero(dn, dn));
                for (const Permutation& s : all_permutations(n)) {
                    const Eigen::MatrixXd left = reps[a]->matrix(s.inverse());
                    const Eigen::MatrixXd right = reps[b]->matrix(s);
                    for (int i = 0; i < dm; ++i) {
                        for (int j = 0; j < dm; ++j) sums[i * dm + j] += left(i, j) * right;
                    }
                }
                const double norm = static_cast<double>(factorial(n)) / dm;
                for (int i = 0; i < dm; ++i) {
                    for (int j = 0; j < dm; ++j) {
                        for (int k = 0; k < dn; ++k) {
                            for (int l = 0; l < dn; ++l) {
                                double expect = 0.0;
                                if (a == b && i == l && j == k) expect = norm;
                                residual = std::max(residual,
                                                    std::abs(sums[i * dm + j](k, l) - expect));
                            }
                        }
                    }
                }
            }
        }
        out.push_back(make_check("schur_orthogonality[n=" + std::to_string(n) + "]", residual,
                                 1e-10));
    }

    // transversal bilinear sum rule, every block-label combination
    for (int n = 3; n <= max_n; ++n) {
        for (int m : {n - 1, n - 2}) {
            if (m < 1) continue;
            double residual = 0.0;
            const std::vector<YoungDiagram> shapes = partitions_of(n);
            for (const YoungDiagram& mu : shapes) {
                for (const YoungDiagram& nu : shapes) {
                    const YoungOrthogonalRep& rm = cached_rep(mu);
                    const YoungOrthogonalRep& rn = cached_rep(nu);
                    const auto blocks_m = rm.restriction_blocks(m);
                    const auto blocks_n = rn.restriction_blocks(m);
                    for (const auto& ra : blocks_m) {
                        for (const auto& rb : blocks_m) {
                            for (const auto& rc : blocks_n) {
                                if (rc.sub != rb.sub) continue;
                                for (const auto& rd : blocks_n) {
                                    residual = std::max(residual,
                                                        transversal_block_sum_residual(
                                                            rm, rn, m, ra.path, rb.path,
                                                            rc.path, rd.path));
                                }
                            }
                        }
                    }
                }
            }
            out.push_back(make_check("coset_bilinear_sum[n=" + std::to_string(n) + ",H=S(" +
                                         std::to_string(m) + ")]",
                                     residual, 1e-10));
        }
    }

    // Schur-Weyl dimension count, exact
    for (int d : {2, 3}) {
        for (int n = 1; n <= 8; ++n) {
            std::int64_t total = 0;
            for (const YoungDiagram& mu : partitions_of(n, d)) {
                total = checked_add(total, checked_mul(weyl_multiplicity(mu, d),
                                                       hook_length_dimension(mu)));
            }
            const double residual = std::abs(static_cast<double>(total - ipow(d, n)));
            out.push_back(make_check("schur_weyl_dimension_sum[n=" + std::to_string(n) +
                                         ",d=" + std::to_string(d) + "]",
                                     residual, 0.0));
        }
    }

    // generator presentation, homomorphism and orthogonality to n = 6
    for (int n = 2; n <= 6; ++n) {
        double presentation = 0.0, homomorphism = 0.0, orthogonality = 0.0;
        double branching = 0.0, block_action = 0.0;
        for (const YoungDiagram& mu : partitions_of(n)) {
            const YoungOrthogonalRep& rep = cached_rep(mu);
            const int dim = rep.dimension();
            const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
            for (int i = 0; i < n - 1; ++i) {
                presentation = std::max(
                    presentation, (rep.generator(i) * rep.generator(i) - id).cwiseAbs().maxCoeff());
                if (i + 1 < n - 1) {
                    const Eigen::MatrixXd& a = rep.generator(i);
                    const Eigen::MatrixXd& b = rep.generator(i + 1);
                    presentation =
                        std::max(presentation, (a * b * a - b * a * b).cwiseAbs().maxCoeff());
                }
                for (int j = i + 2; j < n - 1; ++j) {
                    const Eigen::MatrixXd& a = rep.generator(i);
                    const Eigen::MatrixXd& b = rep.generator(j);
                    presentation = std::max(presentation, (a * b - b * a).cwiseAbs().maxCoeff());
                }
            }
            for (int trial = 0; trial < 4; ++trial) {
                const Permutation p = detail::random_permutation(n, rng);
                const Permutation q = detail::random_permutation(n, rng);
                const Eigen::MatrixXd mp = rep.matrix(p);
                homomorphism = std::max(
                    homomorphism, (rep.matrix(p * q) - mp * rep.matrix(q)).cwiseAbs().maxCoeff());
                orthogonality = std::max(
                    orthogonality, (mp.transpose() * mp - id).cwiseAbs().maxCoeff());
            }

            // branching: the layer below carries each one-box removal once
            std::vector<YoungDiagram> expected = remove_box(mu);
            std::vector<YoungDiagram> got;
            for (const auto& block : rep.restriction_blocks(n - 1)) got.push_back(block.sub);
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            if (expected != got) branching = 1.0;

            // the block of a subgroup element is the subdiagram representation
            for (int m = 1; m < n; ++m) {
                const Permutation kappa = detail::random_permutation(m, rng).embedded(n);
                const Eigen::MatrixXd full = rep.matrix(kappa);
                Eigen::MatrixXd masked = full;
                for (const auto& block : rep.restriction_blocks(m)) {
                    const Permutation small(std::vector<int>(kappa.images().begin(),
                                                             kappa.images().begin() + m));
                    masked.block(block.begin, block.begin, block.size, block.size) -=
                        cached_rep(block.sub).matrix(small);
                }
                block_action = std::max(block_action, masked.cwiseAbs().maxCoeff());
            }
        }
        const std::string tag = "[n=" + std::to_string(n) + "]";
        out.push_back(make_check("yor_presentation" + tag, presentation, 1e-12));
        out.push_back(make_check("yor_homomorphism" + tag, homomorphism, 1e-12));
        out.push_back(make_check("yor_orthogonality" + tag, orthogonality, 1e-12));
        out.push_back(make_check("restriction_branching" + tag, branching, 0.0));
        out.push_back(make_check("restriction_block_action" + tag, block_action, 1e-12));
    }

    return out;
}

std::vector<CheckResult> operator_identity_suite(const ProtocolParams& params, unsigned seed,
                                                 long cap) {
    std::vector<CheckResult> out;
    std::mt19937 rng(seed);
    const int N = params.ports, k = params.teleported, d = params.local_dim;
    const int n = params.total_sites();
    const std::string tag = point_tag(params);

    const SiteOperator vk = v_k_operator(params, cap);
    const std::vector<std::vector<int>> tuples = port_tuples(N, k);
    const double dpow_n = static_cast<double>(ipow(d, N));

    // signal states and the teleportation operator
    {
        const SiteOperator sigma0 = signal_state(canonical_tuple(params), params, cap);
        out.push_back(make_check("signal_matches_vk" + tag,
                                 max_abs(sigma0.mat - vk.mat / dpow_n), 0.0));

        double trace_dev = 0.0;
        for (const auto& tuple : tuples) {
            const std::complex<double> tr = signal_state(tuple, params, cap).mat.trace();
            trace_dev = std::max(trace_dev, std::abs(tr - std::complex<double>(1.0, 0.0)));
        }
        out.push_back(make_check("signal_unit_trace" + tag, trace_dev, 1e-12));

        const Permutation tau = detail::random_permutation(N, rng).embedded(n);
        double covariance = 0.0;
        for (const auto& tuple : tuples) {
            std::vector<int> mapped(tuple.size());
            for (std::size_t l = 0; l < tuple.size(); ++l) mapped[l] = tau(tuple[l]);
            const SiteOperator lhs =
                conjugate_by_permutation(signal_state(tuple, params, cap), tau);
            covariance =
                std::max(covariance, max_abs(lhs.mat - signal_state(mapped, params, cap).mat));
        }
        out.push_back(make_check("signal_covariance" + tag, covariance, 1e-12));

        const SiteOperator rho_signals = mpbt_operator_from_signals(params, cap);
        const SiteOperator rho_coset = mpbt_operator_from_coset(params, cap);
        out.push_back(make_check("rho_two_routes" + tag,
                                 max_abs(rho_signals.mat - rho_coset.mat), 1e-12));
        out.push_back(make_check(
            "rho_coset_invariance" + tag,
            max_abs(conjugate_by_permutation(rho_signals, tau).mat - rho_signals.mat), 1e-12));
        out.push_back(make_check(
            "rho_trace" + tag,
            std::abs(rho_signals.mat.trace().real() - static_cast<double>(params.signal_count())),
            1e-10));
    }

    // partially transposed swaps: sandwich identity and idempotence scale
    {
        const SiteOperator x{detail::random_matrix(site_space_dim(d, N, cap),
                                                   site_space_dim(d, N, cap), rng),
                             d, N};
        const SiteOperator xt = partial_trace(x, trace_k_sites(params));
        const Eigen::MatrixXcd lhs = vk.mat * embed_front(x, n, cap).mat * vk.mat;
        const Eigen::MatrixXcd rhs = embed_front(xt, n, cap).mat * vk.mat;
        out.push_back(make_check("vk_sandwich" + tag, max_abs(lhs - rhs), 1e-12));
        out.push_back(make_check(
            "vk_squared" + tag,
            max_abs(vk.mat * vk.mat - static_cast<double>(ipow(d, k)) * vk.mat), 1e-12));
    }

    // weighted permutation sums reproduce the matrix units
    {
        double residual = 0.0;
        for (const YoungDiagram& alpha : partitions_of(N, d)) {
            const YoungOrthogonalRep& rep = cached_rep(alpha);
            const int da = rep.dimension();
            const Eigen::MatrixXcd x = detail::random_matrix(da, da, rng);
            SiteOperator lhs = zero_operator(d, N, cap);
            for (const Permutation& s : all_permutations(N)) {
                const std::complex<double> coeff = (x * rep.matrix(s.inverse())).trace();
                const std::vector<long> map = permutation_index_map(s, d, N, cap);
                for (long c = 0; c < lhs.dim(); ++c) lhs.mat(map[c], c) += coeff;
            }
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < da; ++i) {
                for (int j = 0; j < da; ++j) pairs.emplace_back(i, j);
            }
            const EOperatorTable table(rep, d, pairs, cap);
            SiteOperator rhs = zero_operator(d, N, cap);
            for (int i = 0; i < da; ++i) {
                for (int j = 0; j < da; ++j) rhs.mat += x(i, j) * table.at(i, j).mat;
            }
            rhs.mat *= static_cast<double>(factorial(N)) / da;
            residual = std::max(residual, max_abs(lhs.mat - rhs.mat));
        }
        out.push_back(make_check("irrep_weighted_sum" + tag, residual, 1e-10));
    }

    // matrix-unit algebra of the Schur decomposition on the port block
    {
        const std::vector<YoungDiagram> shapes = partitions_of(N, d);
        std::vector<const YoungOrthogonalRep*> reps;
        std::vector<std::unique_ptr<EOperatorTable>> tables;
        for (const YoungDiagram& mu : shapes) {
            reps.push_back(&cached_rep(mu));
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < reps.back()->dimension(); ++i) {
                for (int j = 0; j < reps.back()->dimension(); ++j) pairs.emplace_back(i, j);
            }
            tables.push_back(std::make_unique<EOperatorTable>(*reps.back(), d, pairs, cap));
        }

        double composition = 0.0, trace_dev = 0.0, action = 0.0;
        SiteOperator completeness = zero_operator(d, N, cap);
        for (std::size_t a = 0; a < shapes.size(); ++a) {
            const std::int64_t mult = weyl_multiplicity(shapes[a], d);
            const int da = reps[a]->dimension();
            for (int i = 0; i < da; ++i) {
                completeness.mat += tables[a]->at(i, i).mat;
                for (int j = 0; j < da; ++j) {
                    const std::complex<double> tr = tables[a]->at(i, j).mat.trace();
                    trace_dev = std::max(trace_dev,
                                         std::abs(tr - std::complex<double>(
                                                           i == j ? static_cast<double>(mult) : 0.0,
                                                           0.0)));
                }
            }
            for (std::size_t b = 0; b < shapes.size(); ++b) {
                const int db = reps[b]->dimension();
                for (int i = 0; i < da; ++i) {
                    for (int j = 0; j < da; ++j) {
                        for (int kk = 0; kk < db; ++kk) {
                            for (int l = 0; l < db; ++l) {
                                Eigen::MatrixXcd prod =
                                    tables[a]->at(i, j).mat * tables[b]->at(kk, l).mat;
                                if (a == b && j == kk) prod -= tables[a]->at(i, l).mat;
                                composition = std::max(composition, max_abs(prod));
                            }
                        }
                    }
                }
            }

            const Permutation sigma = detail::random_permutation(N, rng);
            const SiteOperator vs = permutation_operator(sigma, d, cap);
            const Eigen::MatrixXd phi = reps[a]->matrix(sigma);
            for (int i = 0; i < da; ++i) {
                for (int j = 0; j < da; ++j) {
                    Eigen::MatrixXcd left = tables[a]->at(i, j).mat * vs.mat;
                    Eigen::MatrixXcd right = vs.mat * tables[a]->at(i, j).mat;
                    for (int kk = 0; kk < da; ++kk) {
                        left -= phi(j, kk) * tables[a]->at(i, kk).mat;
                        right -= phi(kk, i) * tables[a]->at(kk, j).mat;
                    }
                    action = std::max(action, std::max(max_abs(left), max_abs(right)));
                }
            }
        }
        completeness.mat -= Eigen::MatrixXcd::Identity(completeness.dim(), completeness.dim());
        out.push_back(make_check("e_composition" + tag, composition, 1e-12));
        out.push_back(make_check("e_trace" + tag, trace_dev, 1e-10));
        out.push_back(make_check("e_action" + tag, action, 1e-10));
        out.push_back(make_check("e_completeness" + tag, max_abs(completeness.mat), 1e-10));

        // Young projectors
        double projector = 0.0;
        SiteOperator psum = zero_operator(d, N, cap);
        std::vector<SiteOperator> projectors;
        for (std::size_t a = 0; a < shapes.size(); ++a) {
            projectors.push_back(young_projector(shapes[a], N, d, cap));
            psum.mat += projectors.back().mat;
            const double expect =
                static_cast<double>(checked_mul(weyl_multiplicity(shapes[a], d),
                                                hook_length_dimension(shapes[a])));
            projector = std::max(projector,
                                 std::abs(projectors.back().mat.trace().real() - expect));
        }
        for (std::size_t a = 0; a < shapes.size(); ++a) {
            for (std::size_t b = 0; b < shapes.size(); ++b) {
                Eigen::MatrixXcd prod = projectors[a].mat * projectors[b].mat;
                if (a == b) prod -= projectors[a].mat;
                projector = std::max(projector, max_abs(prod));
            }
        }
        psum.mat -= Eigen::MatrixXcd::Identity(psum.dim(), psum.dim());
        projector = std::max(projector, max_abs(psum.mat));
        out.push_back(make_check("young_projector_algebra" + tag, projector, 1e-10));
    }

    // partial traces of matrix units: single layer, k layers, projectors
    {
        double residual = 0.0;
        for (const YoungDiagram& mu : partitions_of(N, d)) {
            const YoungOrthogonalRep& rep = cached_rep(mu);
            const int dm = rep.dimension();
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < dm; ++i) {
                for (int j = 0; j < dm; ++j) pairs.emplace_back(i, j);
            }
            const EOperatorTable table(rep, d, pairs, cap);
            const std::int64_t m_mu = weyl_multiplicity(mu, d);

            const auto blocks = rep.restriction_blocks(N - 1);
            std::map<std::vector<int>, std::unique_ptr<EOperatorTable>> sub_tables;
            for (const auto& block : blocks) {
                if (sub_tables.count(block.sub.rows())) continue;
                const YoungOrthogonalRep& sub_rep = cached_rep(block.sub);
                std::vector<std::pair<int, int>> sub_pairs;
                for (int i = 0; i < sub_rep.dimension(); ++i) {
                    for (int j = 0; j < sub_rep.dimension(); ++j) sub_pairs.emplace_back(i, j);
                }
                sub_tables.emplace(block.sub.rows(), std::make_unique<EOperatorTable>(
                                                         sub_rep, d, sub_pairs, cap));
            }
            for (const auto& ba : blocks) {
                const std::int64_t m_beta = weyl_multiplicity(ba.sub, d);
                for (const auto& bb : blocks) {
                    for (int i = 0; i < ba.size; ++i) {
                        for (int j = 0; j < bb.size; ++j) {
                            const SiteOperator traced = partial_trace(
                                table.at(ba.begin + i, bb.begin + j), {N - 1});
                            Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(traced.dim(),
                                                                             traced.dim());
                            if (ba.sub == bb.sub && m_beta > 0) {
                                expect = (static_cast<double>(m_mu) / m_beta) *
                                         sub_tables.at(ba.sub.rows())->at(i, j).mat;
                            }
                            residual = std::max(residual, max_abs(traced.mat - expect));
                        }
                    }
                }
            }
        }
        out.push_back(make_check("e_trace_last_site" + tag, residual, 1e-10));
    }
    {
        double residual = 0.0;
        for (const YoungDiagram& mu : partitions_of(N, d)) {
            const YoungOrthogonalRep& rep = cached_rep(mu);
            const int dm = rep.dimension();
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < dm; ++i) {
                for (int j = 0; j < dm; ++j) pairs.emplace_back(i, j);
            }
            const EOperatorTable table(rep, d, pairs, cap);
            const std::int64_t m_mu = weyl_multiplicity(mu, d);

            const auto blocks = rep.restriction_blocks(N - k);
            std::map<std::vector<int>, std::unique_ptr<EOperatorTable>> sub_tables;
            for (const auto& block : blocks) {
                if (sub_tables.count(block.sub.rows())) continue;
                const YoungOrthogonalRep& sub_rep = cached_rep(block.sub);
                std::vector<std::pair<int, int>> sub_pairs;
                for (int i = 0; i < sub_rep.dimension(); ++i) {
                    for (int j = 0; j < sub_rep.dimension(); ++j) sub_pairs.emplace_back(i, j);
                }
                sub_tables.emplace(block.sub.rows(), std::make_unique<EOperatorTable>(
                                                         sub_rep, d, sub_pairs, cap));
            }
            // trace over the top k layers of the N-site block
            std::vector<int> sites;
            for (int s = N - k; s < N; ++s) sites.push_back(s);
            for (const auto& ba : blocks) {
                const std::int64_t m_beta = weyl_multiplicity(ba.sub, d);
                for (const auto& bb : blocks) {
                    for (int i = 0; i < ba.size; ++i) {
                        for (int j = 0; j < bb.size; ++j) {
                            const SiteOperator traced =
                                partial_trace(table.at(ba.begin + i, bb.begin + j), sites);
                            Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(traced.dim(),
                                                                             traced.dim());
                            if (ba.path == bb.path && m_beta > 0) {
                                expect = (static_cast<double>(m_mu) / m_beta) *
                                         sub_tables.at(ba.sub.rows())->at(i, j).mat;
                            }
                            residual = std::max(residual, max_abs(traced.mat - expect));
                        }
                    }
                }
            }
        }
        out.push_back(make_check("e_trace_k_sites" + tag, residual, 1e-10));
    }
    {
        double single = 0.0, multi = 0.0;
        for (const YoungDiagram& mu : partitions_of(N, d)) {
            const std::int64_t m_mu = weyl_multiplicity(mu, d);
            const SiteOperator p_mu = young_projector(mu, N, d, cap);

            SiteOperator traced1 = partial_trace(p_mu, {N - 1});
            for (const YoungDiagram& beta : remove_box(mu)) {
                const std::int64_t m_beta = weyl_multiplicity(beta, d);
                if (m_beta == 0) continue;
                traced1.mat -= (static_cast<double>(m_mu) / m_beta) *
                               young_projector(beta, N - 1, d, cap).mat;
            }
            single = std::max(single, max_abs(traced1.mat));

            std::vector<int> sites;
            for (int s = N - k; s < N; ++s) sites.push_back(s);
            SiteOperator traced = partial_trace(p_mu, sites);
            for (const YoungDiagram& beta : partitions_of(N - k, d)) {
                const std::int64_t m_beta = weyl_multiplicity(beta, d);
                const std::int64_t paths = path_count(mu, beta, d);
                if (m_beta == 0 || paths == 0) continue;
                traced.mat -= (static_cast<double>(paths) * m_mu / m_beta) *
                              young_projector(beta, N - k, d, cap).mat;
            }
            multi = std::max(multi, max_abs(traced.mat));
        }
        out.push_back(make_check("projector_trace_single_site" + tag, single, 1e-10));
        out.push_back(make_check("projector_trace_k_sites" + tag, multi, 1e-10));
    }

    // the ideal basis: composition rule, matrix elements, eigenprojectors
    {
        const IdealBasis basis(params, cap);
        const std::vector<IdealBasis::Element> labels = basis.elements();
        std::vector<SiteOperator> ops;
        ops.reserve(labels.size());
        for (const auto& e : labels) ops.push_back(basis.element_operator(e));

        auto find_element = [&](const IdealBasis::Element& want) -> const SiteOperator& {
            for (std::size_t idx = 0; idx < labels.size(); ++idx) {
                const auto& e = labels[idx];
                if (e.mu == want.mu && e.nu == want.nu && e.alpha == want.alpha &&
                    e.path_mu == want.path_mu && e.path_nu == want.path_nu && e.i == want.i &&
                    e.j == want.j) {
                    return ops[idx];
                }
            }
            throw std::logic_error("expected basis element missing from the enumeration");
        };

        double composition = 0.0;
        for (std::size_t a = 0; a < labels.size(); ++a) {
            for (std::size_t b = 0; b < labels.size(); ++b) {
                Eigen::MatrixXcd prod = ops[a].mat * ops[b].mat;
                const auto& ea = labels[a];
                const auto& eb = labels[b];
                if (ea.path_nu == eb.path_mu && ea.j == eb.i) {
                    prod -= find_element({ea.mu, eb.nu, ea.alpha, ea.path_mu, eb.path_nu, ea.i,
                                          eb.j})
                                .mat;
                }
                composition = std::max(composition, max_abs(prod));
            }
        }
        out.push_back(make_check("f_composition" + tag, composition, 1e-10));

        // matrix elements of V^(k), V_tau and rho against the closed forms
        const SiteOperator rho = mpbt_operator_from_signals(params, cap);
        const Permutation tau = detail::random_permutation(N, rng);
        const SiteOperator vtau = permutation_operator(tau.embedded(n), d, cap);
        double vk_elem = 0.0, perm_elem = 0.0, rho_elem = 0.0;
        for (std::size_t a = 0; a < labels.size(); ++a) {
            const auto& e = labels[a];
            const double m_mu = static_cast<double>(weyl_multiplicity(e.mu, d));
            const double m_nu = static_cast<double>(weyl_multiplicity(e.nu, d));
            const double m_alpha = static_cast<double>(weyl_multiplicity(e.alpha, d));
            const auto pi = detail::split_index(basis.rep(e.mu), N - k, e.i);
            const auto pj = detail::split_index(basis.rep(e.nu), N - k, e.j);

            const std::complex<double> got_vk = (vk.mat * ops[a].mat).trace() / m_alpha;
            double expect_vk = 0.0;
            if (pi.path == e.path_mu && pj.path == e.path_nu && pi.inner == pj.inner) {
                expect_vk = std::sqrt(m_mu * m_nu) / m_alpha;
            }
            vk_elem = std::max(vk_elem, std::abs(got_vk - expect_vk));

            const std::complex<double> got_tau = (vtau.mat * ops[a].mat).trace() / m_alpha;
            double expect_tau = 0.0;
            if (e.mu == e.nu && e.path_mu == e.path_nu) {
                expect_tau = basis.rep(e.mu).matrix(tau)(e.j, e.i);
            }
            perm_elem = std::max(perm_elem, std::abs(got_tau - expect_tau));

            const std::complex<double> got_rho = (rho.mat * ops[a].mat).trace() / m_alpha;
            double expect_rho = 0.0;
            if (e.mu == e.nu && e.path_mu == e.path_nu && e.i == e.j) {
                expect_rho = mpbt_eigenvalue(params, e.alpha, e.mu).to_double();
            }
            rho_elem = std::max(rho_elem, std::abs(got_rho - expect_rho));
        }
        out.push_back(make_check("vk_matrix_elements" + tag, vk_elem, 1e-10));
        out.push_back(make_check("perm_matrix_elements" + tag, perm_elem, 1e-10));
        out.push_back(make_check("rho_matrix_elements" + tag, rho_elem, 1e-10));

        // eigenprojectors of the ideal
        struct Block {
            YoungDiagram mu, alpha;
            SiteOperator op;
        };
        std::vector<Block> projectors;
        for (const YoungDiagram& alpha : basis.alpha_list()) {
            for (const YoungDiagram& mu : basis.mu_list()) {
                if (basis.paths(mu, alpha).empty()) continue;
                projectors.push_back({mu, alpha, basis.projector(mu, alpha)});
            }
        }
        double idem = 0.0, ortho = 0.0;
        SiteOperator ideal_identity = zero_operator(d, n, cap);
        for (std::size_t a = 0; a < projectors.size(); ++a) {
            ideal_identity.mat += projectors[a].op.mat;
            idem = std::max(idem, max_abs(projectors[a].op.mat * projectors[a].op.mat -
                                          projectors[a].op.mat));
            for (std::size_t b = 0; b < projectors.size(); ++b) {
                if (a == b) continue;
                ortho = std::max(ortho, max_abs(projectors[a].op.mat * projectors[b].op.mat));
            }
        }
        out.push_back(make_check("f_projector_idempotent" + tag, idem, 1e-10));
        out.push_back(make_check("f_projector_orthogonal" + tag, ortho, 1e-10));

        double span = 0.0;
        for (int trial = 0; trial < 3; ++trial) {
            const Permutation t1 = detail::random_permutation(N, rng).embedded(n);
            const Permutation t2 = detail::random_permutation(N, rng).embedded(n);
            const Eigen::MatrixXcd x = permutation_operator(t1, d, cap).mat * vk.mat *
                                       permutation_operator(t2, d, cap).mat;
            span = std::max(span, max_abs(ideal_identity.mat * x - x));
            span = std::max(span, max_abs(x * ideal_identity.mat - x));
        }
        out.push_back(make_check("f_projectors_span_ideal" + tag, span, 1e-10));

        double trace_2k = 0.0, trace_k = 0.0, trace_full = 0.0, simple_prod = 0.0;
        double eigen_action = 0.0;
        for (const Block& block : projectors) {
            const double m_mu = static_cast<double>(weyl_multiplicity(block.mu, d));
            const double m_alpha = static_cast<double>(weyl_multiplicity(block.alpha, d));
            const double paths = static_cast<double>(path_count(block.mu, block.alpha, d));
            const double d_mu = static_cast<double>(hook_length_dimension(block.mu));

            const SiteOperator t2k = partial_trace(
                SiteOperator{vk.mat * block.op.mat, d, n}, trace_2k_sites(params));
            trace_2k = std::max(
                trace_2k, max_abs(t2k.mat - paths * (m_mu / m_alpha) *
                                                young_projector(block.alpha, N - k, d, cap).mat));

            // the (k) trace here runs over the operator's own last k sites,
            // the teleported legs; tracing the middle ports instead gives a
            // genuinely different operator
            std::vector<int> leg_sites;
            for (int s = n - k; s < n; ++s) leg_sites.push_back(s);
            const SiteOperator tk = partial_trace(block.op, leg_sites);
            trace_k = std::max(
                trace_k, max_abs(tk.mat - paths * (m_alpha / m_mu) *
                                              young_projector(block.mu, N, d, cap).mat));

            trace_full = std::max(trace_full, std::abs(block.op.mat.trace().real() -
                                                       paths * m_alpha * d_mu));

            const SiteOperator p_alpha =
                embed_front(young_projector(block.alpha, N - k, d, cap), n, cap);
            const SiteOperator p_mu = embed_front(young_projector(block.mu, N, d, cap), n, cap);
            simple_prod = std::max(simple_prod, max_abs(vk.mat * block.op.mat -
                                                        vk.mat * p_alpha.mat * p_mu.mat));

            const double lambda = mpbt_eigenvalue(params, block.alpha, block.mu).to_double();
            eigen_action =
                std::max(eigen_action, max_abs(rho.mat * block.op.mat - lambda * block.op.mat));
        }
        out.push_back(make_check("f_projector_trace_2k" + tag, trace_2k, 1e-10));
        out.push_back(make_check("f_projector_trace_k" + tag, trace_k, 1e-10));
        out.push_back(make_check("f_projector_trace" + tag, trace_full, 1e-10));
        out.push_back(make_check("vk_f_projector_product" + tag, simple_prod, 1e-10));
        out.push_back(make_check("rho_eigenprojector_action" + tag, eigen_action, 1e-10));

        // left action of V^(k) and V_tau on the basis elements
        double vk_action = 0.0, perm_action = 0.0;
        for (std::size_t a = 0; a < labels.size(); ++a) {
            const auto& e = labels[a];
            const auto pj = detail::split_index(basis.rep(e.nu), N - k, e.j);
            const Eigen::MatrixXcd lhs = ops[a].mat * vk.mat;
            Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(lhs.rows(), lhs.cols());
            if (pj.path == e.path_nu) {
                const double m_nu = static_cast<double>(weyl_multiplicity(e.nu, d));
                const double m_alpha = static_cast<double>(weyl_multiplicity(e.alpha, d));
                for (const YoungDiagram& mu2 : basis.mu_list()) {
                    const double m_mu2 = static_cast<double>(weyl_multiplicity(mu2, d));
                    for (const LatticePath& path2 : basis.paths(mu2, e.alpha)) {
                        const int j2 = basis.tableau_index(mu2, path2, pj.inner);
                        rhs += std::sqrt(m_nu * m_mu2) / m_alpha *
                               find_element({e.mu, mu2, e.alpha, e.path_mu, path2, e.i, j2}).mat;
                    }
                }
            }
            vk_action = std::max(vk_action, max_abs(lhs - rhs));

            const Eigen::MatrixXcd lhs_tau = ops[a].mat * vtau.mat;
            Eigen::MatrixXcd rhs_tau = Eigen::MatrixXcd::Zero(lhs.rows(), lhs.cols());
            const Eigen::MatrixXd phi = basis.rep(e.nu).matrix(tau);
            for (int kk = 0; kk < basis.rep(e.nu).dimension(); ++kk) {
                rhs_tau += phi(e.j, kk) *
                           find_element({e.mu, e.nu, e.alpha, e.path_mu, e.path_nu, e.i, kk}).mat;
            }
            perm_action = std::max(perm_action, max_abs(lhs_tau - rhs_tau));
        }
        out.push_back(make_check("f_vk_action" + tag, vk_action, 1e-10));
        out.push_back(make_check("f_perm_action" + tag, perm_action, 1e-10));
    }

    return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> out = rep_theory_suite(5);

    const std::vector<std::tuple<int, int, int>> pinned = {{2, 1, 2}, {3, 1, 2}, {4, 2, 2}};
    for (const auto& [N, k, d] : pinned) {
        const ProtocolParams params(N, k, d);
        std::vector<CheckResult> identities =
            operator_identity_suite(params, options.seed, options.max_dim);
        out.insert(out.end(), identities.begin(), identities.end());
    }

    for (int d : {2, 3}) {
        for (int N = 2; N <= 8; ++N) {
            for (int k = 1; k <= N / 2; ++k) {
                const std::int64_t dim = ipow(d, N + k);
                if (dim > options.max_dim) continue;
                const ProtocolParams params(N, k, d);
                const std::string tag = point_tag(params);

                const Rational trace_residual =
                    spectrum_trace(mpbt_spectrum(params)) - Rational(params.signal_count());
                out.push_back(make_check("spectrum_trace_identity" + tag,
                                         std::abs(trace_residual.to_double()), 0.0));

                {
                    const SiteOperator rho_signals =
                        mpbt_operator_from_signals(params, options.max_dim);
                    const SiteOperator rho_coset = mpbt_operator_from_coset(params,
                                                                            options.max_dim);
                    out.push_back(make_check(
                        "rho_two_routes" + tag,
                        (rho_signals.mat - rho_coset.mat).cwiseAbs().maxCoeff(), 1e-12));
                    out.push_back(make_check(
                        "rho_trace" + tag,
                        std::abs(rho_signals.mat.trace().real() -
                                 static_cast<double>(params.signal_count())),
                        1e-9));
                    const SiteOperator sigma0 =
                        signal_state(canonical_tuple(params), params, options.max_dim);
                    const SiteOperator vk = v_k_operator(params, options.max_dim);
                    out.push_back(make_check(
                        "signal_matches_vk" + tag,
                        (sigma0.mat - vk.mat / static_cast<double>(ipow(d, N)))
                            .cwiseAbs()
                            .maxCoeff(),
                        0.0));
                }

                if (dim > options.heavy_dim) continue;
                out.push_back(spectral_decomposition_check(params, options.max_dim));

                const SrmReport srm = srm_fidelity(params, options.max_dim);
                const double formula_f = entanglement_fidelity(params);
                const double rel =
                    std::abs(srm.fidelity - formula_f) / std::max(formula_f, 1e-30);
                out.push_back(make_check("fidelity_formula_vs_srm" + tag, rel, 1e-9));
                out.push_back(make_check("srm_internal_consistency" + tag,
                                         std::max({std::abs(srm.fidelity - srm.fidelity_covariant),
                                                   srm.povm_identity_residual,
                                                   srm.support_residual,
                                                   srm.support_rank == srm.expected_rank ? 0.0
                                                                                         : 1.0}),
                                         1e-10));

                const SdpReport sdp = sdp_check(params, options.max_dim);
                out.push_back(make_check(
                    "probability_formula_vs_povm" + tag,
                    std::max(sdp.primal_vs_formula, sdp.dual_vs_formula), 1e-10));
                out.push_back(make_check("sdp_primal_feasible" + tag,
                                         std::max(-sdp.theta_min_eigenvalue,
                                                  sdp.primal_max_eigenvalue - 1.0),
                                         1e-10));
                out.push_back(make_check("sdp_dual_feasible" + tag,
                                         std::max(-sdp.omega_min_eigenvalue,
                                                  sdp.dual_trace_residual),
                                         1e-10));
            }
        }
    }
    return out;
}

}  // namespace mpbt
