#include "mpbt/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mpbt {

namespace {

void emit_tuples(int N, int k, std::vector<int>& acc, std::vector<bool>& used,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    for (int p = 0; p < N; ++p) {
        if (used[p]) continue;
        used[p] = true;
        acc.push_back(p);
        emit_tuples(N, k, acc, used, out);
        acc.pop_back();
        used[p] = false;
    }
}

/// Nonzero positions of the 0/1 operator with delta(x_r = x_s)
/// delta(y_r = y_s) on the listed pairs and delta(x_a = y_a) on every other
/// site. This is d^k times the tensor product of maximally entangled
/// projectors wired across the pairs.
std::vector<std::pair<long, long>> pattern_positions(int d, int n,
                                                     const std::vector<std::pair<int, int>>& pairs,
                                                     long cap) {
    site_space_dim(d, n, cap);
    std::vector<bool> in_pair(n, false);
    for (const auto& [r, s] : pairs) {
        in_pair[r] = in_pair[s] = true;
    }
    std::vector<int> free_sites;
    for (int j = 0; j < n; ++j) {
        if (!in_pair[j]) free_sites.push_back(j);
    }
    std::vector<long> stride(n);
    long s = 1;
    for (int j = n - 1; j >= 0; --j) {
        stride[j] = s;
        s *= d;
    }
    const int nf = static_cast<int>(free_sites.size());
    const int np = static_cast<int>(pairs.size());
    long fdim = 1;
    for (int i = 0; i < nf; ++i) fdim *= d;
    long pdim = 1;
    for (int i = 0; i < np; ++i) pdim *= d;

    std::vector<std::pair<long, long>> out;
    out.reserve(fdim * pdim * pdim);
    std::vector<long> pair_offset(pdim);
    for (long p = 0; p < pdim; ++p) {
        long offset = 0;
        long rest = p;
        for (int j = np - 1; j >= 0; --j) {
            const long v = rest % d;
            rest /= d;
            offset += v * (stride[pairs[j].first] + stride[pairs[j].second]);
        }
        pair_offset[p] = offset;
    }
    for (long f = 0; f < fdim; ++f) {
        long base = 0;
        long rest = f;
        for (int j = nf - 1; j >= 0; --j) {
            base += (rest % d) * stride[free_sites[j]];
            rest /= d;
        }
        for (long px = 0; px < pdim; ++px) {
            for (long py = 0; py < pdim; ++py) {
                out.emplace_back(base + pair_offset[px], base + pair_offset[py]);
            }
        }
    }
    return out;
}

SiteOperator pair_pattern(int d, int n, const std::vector<std::pair<int, int>>& pairs, long cap) {
    SiteOperator out = zero_operator(d, n, cap);
    for (const auto& [x, y] : pattern_positions(d, n, pairs, cap)) out.mat(x, y) = 1.0;
    return out;
}

std::vector<std::pair<int, int>> tuple_pairs(const std::vector<int>& ports,
                                             const ProtocolParams& params) {
    const int N = params.ports;
    if (static_cast<int>(ports.size()) != params.teleported) {
        throw std::invalid_argument("tuple length must equal the teleported system count");
    }
    std::vector<bool> seen(N, false);
    std::vector<std::pair<int, int>> pairs;
    for (int l = 0; l < params.teleported; ++l) {
        const int p = ports[l];
        if (p < 0 || p >= N || seen[p]) {
            throw std::invalid_argument("tuple entries must be distinct ports");
        }
        seen[p] = true;
        pairs.emplace_back(p, N + l);
    }
    return pairs;
}

}  // namespace

std::vector<std::vector<int>> port_tuples(int N, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    std::vector<bool> used(N, false);
    emit_tuples(N, k, acc, used, out);
    return out;
}

std::vector<int> canonical_tuple(const ProtocolParams& params) {
    std::vector<int> tuple(params.teleported);
    for (int l = 0; l < params.teleported; ++l) tuple[l] = params.ports - 1 - l;
    return tuple;
}

SiteOperator v_k_operator(const ProtocolParams& params, long cap) {
    const int n = params.total_sites(), k = params.teleported;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j <= k; ++j) pairs.emplace_back(n - 2 * k + j - 1, n - j);
    return pair_pattern(params.local_dim, n, pairs, cap);
}

SiteOperator signal_state(const std::vector<int>& ports, const ProtocolParams& params, long cap) {
    SiteOperator out =
        pair_pattern(params.local_dim, params.total_sites(), tuple_pairs(ports, params), cap);
    out.mat *= 1.0 / static_cast<double>(ipow(params.local_dim, params.ports));
    return out;
}

SiteOperator mpbt_operator_from_signals(const ProtocolParams& params, long cap) {
    SiteOperator acc = zero_operator(params.local_dim, params.total_sites(), cap);
    for (const std::vector<int>& tuple : port_tuples(params.ports, params.teleported)) {
        for (const auto& [x, y] : pattern_positions(params.local_dim, params.total_sites(),
                                                    tuple_pairs(tuple, params), cap)) {
            acc.mat(x, y) += 1.0;
        }
    }
    acc.mat *= 1.0 / static_cast<double>(ipow(params.local_dim, params.ports));
    return acc;
}

SiteOperator mpbt_operator_from_coset(const ProtocolParams& params, long cap) {
    // transversal of S(n-k) over S(n-2k), i.e. S(N) over S(N-k)
    const int N = params.ports, k = params.teleported, n = params.total_sites();
    const int d = params.local_dim;
    std::vector<std::pair<int, int>> vk_pairs;
    for (int j = 1; j <= k; ++j) vk_pairs.emplace_back(n - 2 * k + j - 1, n - j);
    const std::vector<std::pair<long, long>> base = pattern_positions(d, n, vk_pairs, cap);

    SiteOperator acc = zero_operator(d, n, cap);
    for (const Permutation& g : coset_transversal(N, N - k)) {
        const std::vector<long> map = permutation_index_map(g.embedded(n), d, n, acc.dim());
        for (const auto& [x, y] : base) acc.mat(map[x], map[y]) += 1.0;
    }
    acc.mat *= 1.0 / static_cast<double>(ipow(d, N));
    return acc;
}

SiteOperator mpbt_operator(const ProtocolParams& params, long cap) {
    SiteOperator rho = mpbt_operator_from_signals(params, cap);
    const SiteOperator other = mpbt_operator_from_coset(params, cap);
    const double dev = (rho.mat - other.mat).cwiseAbs().maxCoeff();
    if (dev > 1e-12) {
        throw std::logic_error("signal-sum and coset forms of the operator disagree: " +
                               std::to_string(dev));
    }
    return rho;
}

EOperatorTable::EOperatorTable(const YoungOrthogonalRep& rep, int d,
                               std::vector<std::pair<int, int>> pairs, long cap) {
    const int m = rep.box_count();
    if (m > kMaxGroupSweep) {
        throw DimensionCapError("group summation over S(" + std::to_string(m) +
                                ") exceeds the sweep guard");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    const long dim = site_space_dim(d, m, cap);
    for (const auto& pr : pairs) {
        if (pr.first < 0 || pr.first >= rep.dimension() || pr.second < 0 ||
            pr.second >= rep.dimension()) {
            throw std::invalid_argument("tableau index out of range");
        }
        ops_.emplace(pr, zero_operator(d, m, cap));
    }

    // One pass over S(m) in plain-changes order: the representation matrix
    // picks up one generator per step, phi(tau s_i) = phi(tau) phi(s_i).
    Eigen::MatrixXd phi = Eigen::MatrixXd::Identity(rep.dimension(), rep.dimension());
    for_each_permutation_plain_changes(m, [&](const Permutation& tau, int swapped) {
        if (swapped >= 0) phi = phi * rep.generator(swapped);
        const std::vector<long> map = permutation_index_map(tau, d, m, cap);
        for (auto& [pr, op] : ops_) {
            const double coeff = phi(pr.first, pr.second);
            if (coeff == 0.0) continue;
            for (long x = 0; x < dim; ++x) op.mat(map[x], x) += coeff;
        }
    });
    const double scale = static_cast<double>(rep.dimension()) / static_cast<double>(factorial(m));
    for (auto& [pr, op] : ops_) op.mat *= scale;
}

const SiteOperator& EOperatorTable::at(int i, int j) const {
    const auto it = ops_.find({i, j});
    if (it == ops_.end()) throw std::out_of_range("pair not requested from the table");
    return it->second;
}

SiteOperator e_operator(const YoungDiagram& mu, int i, int j, int n_sites, int d, long cap) {
    if (n_sites != mu.boxes()) {
        throw std::invalid_argument("site count must equal the diagram box count");
    }
    const YoungOrthogonalRep& rep = cached_rep(mu);
    EOperatorTable table(rep, d, {{i, j}}, cap);
    return table.at(i, j);
}

SiteOperator young_projector(const YoungDiagram& mu, int n_sites, int d, long cap) {
    if (n_sites != mu.boxes()) {
        throw std::invalid_argument("site count must equal the diagram box count");
    }
    const int m = mu.boxes();
    if (m > kMaxGroupSweep) {
        throw DimensionCapError("group summation over S(" + std::to_string(m) +
                                ") exceeds the sweep guard");
    }
    const YoungOrthogonalRep& rep = cached_rep(mu);
    const long dim = site_space_dim(d, m, cap);
    SiteOperator out = zero_operator(d, m, cap);
    Eigen::MatrixXd phi = Eigen::MatrixXd::Identity(rep.dimension(), rep.dimension());
    for_each_permutation_plain_changes(m, [&](const Permutation& tau, int swapped) {
        if (swapped >= 0) phi = phi * rep.generator(swapped);
        const double chi = phi.trace();
        if (chi == 0.0) return;
        const std::vector<long> map = permutation_index_map(tau, d, m, cap);
        for (long x = 0; x < dim; ++x) out.mat(map[x], x) += chi;
    });
    out.mat *= static_cast<double>(rep.dimension()) / static_cast<double>(factorial(m));
    return out;
}

IdealBasis::IdealBasis(const ProtocolParams& params, long cap)
    : params_(params), cap_(cap), v_k_(v_k_operator(params, cap)) {
    const int N = params.ports, k = params.teleported, d = params.local_dim;
    alpha_list_ = partitions_of(N - k, d);
    mu_list_ = partitions_of(N, d);

    for (const YoungDiagram& mu : mu_list_) {
        MuData data;
        data.rep = std::make_unique<YoungOrthogonalRep>(mu);
        std::vector<std::pair<int, int>> pairs;
        for (const YoungDiagram& alpha : alpha_list_) {
            std::vector<LatticePath> paths = lattice_paths(mu, alpha, d);
            if (paths.empty()) continue;
            for (const LatticePath& path : paths) {
                const int begin = data.rep->block_begin(path);
                for (int i = 0; i < data.rep->dimension(); ++i) {
                    pairs.emplace_back(i, begin);
                    pairs.emplace_back(begin, i);
                }
            }
            data.paths_by_alpha.emplace(alpha.rows(), std::move(paths));
        }
        data.e_ops = std::make_unique<EOperatorTable>(*data.rep, d, std::move(pairs), cap);
        mu_data_.emplace(mu.rows(), std::move(data));
    }
}

const IdealBasis::MuData& IdealBasis::mu_data(const YoungDiagram& mu) const {
    const auto it = mu_data_.find(mu.rows());
    if (it == mu_data_.end()) throw std::invalid_argument("diagram not part of the basis");
    return it->second;
}

const std::vector<LatticePath>& IdealBasis::paths(const YoungDiagram& mu,
                                                  const YoungDiagram& alpha) const {
    static const std::vector<LatticePath> kEmpty;
    const MuData& data = mu_data(mu);
    const auto it = data.paths_by_alpha.find(alpha.rows());
    return it == data.paths_by_alpha.end() ? kEmpty : it->second;
}

const YoungOrthogonalRep& IdealBasis::rep(const YoungDiagram& mu) const {
    return *mu_data(mu).rep;
}

std::vector<IdealBasis::Element> IdealBasis::elements() const {
    std::vector<Element> out;
    for (const YoungDiagram& alpha : alpha_list_) {
        for (const YoungDiagram& mu : mu_list_) {
            for (const LatticePath& pm : paths(mu, alpha)) {
                for (const YoungDiagram& nu : mu_list_) {
                    for (const LatticePath& pn : paths(nu, alpha)) {
                        for (int i = 0; i < rep(mu).dimension(); ++i) {
                            for (int j = 0; j < rep(nu).dimension(); ++j) {
                                out.push_back({mu, nu, alpha, pm, pn, i, j});
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

SiteOperator IdealBasis::element_operator(const Element& e) const {
    const int d = params_.local_dim, n = params_.total_sites();
    const MuData& dm = mu_data(e.mu);
    const MuData& dn = mu_data(e.nu);
    const int bm = dm.rep->block_begin(e.path_mu);
    const int bn = dn.rep->block_begin(e.path_nu);
    const double m_mu = static_cast<double>(weyl_multiplicity(e.mu, d));
    const double m_nu = static_cast<double>(weyl_multiplicity(e.nu, d));
    const double m_alpha = static_cast<double>(weyl_multiplicity(e.alpha, d));

    const SiteOperator left = embed_front(dm.e_ops->at(e.i, bm), n, cap_);
    const SiteOperator right = embed_front(dn.e_ops->at(bn, e.j), n, cap_);
    SiteOperator out{Eigen::MatrixXcd(left.mat * v_k_.mat * right.mat), d, n};
    out.mat *= m_alpha / std::sqrt(m_mu * m_nu);
    return out;
}

SiteOperator IdealBasis::projector(const YoungDiagram& mu, const YoungDiagram& alpha) const {
    SiteOperator acc = zero_operator(params_.local_dim, params_.total_sites(), cap_);
    for (const LatticePath& path : paths(mu, alpha)) {
        for (int i = 0; i < rep(mu).dimension(); ++i) {
            acc.mat += element_operator({mu, mu, alpha, path, path, i, i}).mat;
        }
    }
    return acc;
}

int IdealBasis::tableau_index(const YoungDiagram& mu, const LatticePath& path, int inner) const {
    return mu_data(mu).rep->block_begin(path) + inner;
}

}  // namespace mpbt
