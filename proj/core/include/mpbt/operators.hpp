#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "mpbt/irrep.hpp"
#include "mpbt/protocol.hpp"
#include "mpbt/site_operator.hpp"

namespace mpbt {

inline constexpr int kMaxGroupSweep = 8;  // largest m for S(m) summations

/// Outcome tuples: ordered k-tuples of distinct ports (0-based), in
/// lexicographic order. Entry l of a tuple names the port paired with
/// teleported leg N + l.
std::vector<std::vector<int>> port_tuples(int N, int k);

/// The reference tuple (N-1, N-2, ..., N-k) whose signal state is exactly
/// V^(k) / d^N.
std::vector<int> canonical_tuple(const ProtocolParams& params);

/// Product of the k partially transposed swaps pairing site n-2k+j with
/// site n-j+1 (1-based), identity elsewhere. Entries are exactly 0 or 1.
SiteOperator v_k_operator(const ProtocolParams& params, long cap = kDefaultDimCap);

/// Signal state for one outcome tuple: identity on the unused ports tensored
/// with maximally entangled projectors on the (port, teleported leg) pairs,
/// normalized to unit trace.
SiteOperator signal_state(const std::vector<int>& ports, const ProtocolParams& params,
                          long cap = kDefaultDimCap);

/// Sum of all signal states. Built independently from the tuple sum and from
/// the coset-conjugation form; the two must agree entrywise.
SiteOperator mpbt_operator_from_signals(const ProtocolParams& params, long cap = kDefaultDimCap);
SiteOperator mpbt_operator_from_coset(const ProtocolParams& params, long cap = kDefaultDimCap);
SiteOperator mpbt_operator(const ProtocolParams& params, long cap = kDefaultDimCap);

/// Batch of E^mu_{ij} = (d_mu / m!) sum_{tau in S(m)} phi^mu_{ij}(tau) V_tau
/// on m = |mu| sites, assembled in one plain-changes sweep for a fixed set
/// of index pairs.
class EOperatorTable {
public:
    EOperatorTable(const YoungOrthogonalRep& rep, int d,
                   std::vector<std::pair<int, int>> pairs, long cap = kDefaultDimCap);

    const SiteOperator& at(int i, int j) const;

private:
    std::map<std::pair<int, int>, SiteOperator> ops_;
};

/// Single matrix unit of the Schur decomposition on n_sites = |mu| sites.
SiteOperator e_operator(const YoungDiagram& mu, int i, int j, int n_sites, int d,
                        long cap = kDefaultDimCap);

/// P_mu = sum_i E^mu_{ii} on |mu| sites.
SiteOperator young_projector(const YoungDiagram& mu, int n_sites, int d,
                             long cap = kDefaultDimCap);

/// Operator units F of the maximal ideal spanned by
/// { V_tau V^(k) V_tau' : tau, tau' in S(n-k) }, built per protocol point:
///   F^{r s}_{i j} = (m_alpha / sqrt(m_mu m_nu))
///                   E^mu_{i, (r, 1_alpha)} V^(k) E^nu_{(s, 1_alpha), j}
/// with r, s descending lattice paths from mu resp. nu to alpha.
class IdealBasis {
public:
    explicit IdealBasis(const ProtocolParams& params, long cap = kDefaultDimCap);

    struct Element {
        YoungDiagram mu, nu, alpha;
        LatticePath path_mu, path_nu;
        int i, j;  // tableau indices, 0-based
    };

    const ProtocolParams& params() const { return params_; }
    const SiteOperator& v_k() const { return v_k_; }

    /// Diagrams mu |- N with at most d rows reachable from some alpha.
    const std::vector<YoungDiagram>& mu_list() const { return mu_list_; }
    const std::vector<YoungDiagram>& alpha_list() const { return alpha_list_; }
    const std::vector<LatticePath>& paths(const YoungDiagram& mu,
                                          const YoungDiagram& alpha) const;
    const YoungOrthogonalRep& rep(const YoungDiagram& mu) const;

    /// All basis element labels in deterministic order.
    std::vector<Element> elements() const;

    SiteOperator element_operator(const Element& e) const;

    /// F_mu(alpha) = sum over paths r and tableau indices of F^{r r}_{i i}.
    SiteOperator projector(const YoungDiagram& mu, const YoungDiagram& alpha) const;

    int tableau_index(const YoungDiagram& mu, const LatticePath& path, int inner) const;

private:
    struct MuData {
        std::unique_ptr<YoungOrthogonalRep> rep;
        std::map<std::vector<int>, std::vector<LatticePath>> paths_by_alpha;
        std::unique_ptr<EOperatorTable> e_ops;
    };

    const MuData& mu_data(const YoungDiagram& mu) const;

    ProtocolParams params_;
    long cap_;
    SiteOperator v_k_;
    std::vector<YoungDiagram> mu_list_;
    std::vector<YoungDiagram> alpha_list_;
    std::map<std::vector<int>, MuData> mu_data_;
};

}  // namespace mpbt
