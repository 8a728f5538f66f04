#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

#include "mpbt/permutation.hpp"

namespace mpbt {

inline constexpr long kDefaultDimCap = 4096;

class DimensionCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Total dimension d^n, guarded by the cap.
long site_space_dim(int d, int n, long cap = kDefaultDimCap);

/// Dense complex operator on (C^d)^{x n}. Site 0 is the most significant
/// tensor factor: basis index x has digit x_j = (x / d^{n-1-j}) % d for
/// site j.
struct SiteOperator {
    Eigen::MatrixXcd mat;
    int local_dim = 1;
    int site_count = 0;

    long dim() const { return mat.rows(); }
};

SiteOperator identity_operator(int d, int n, long cap = kDefaultDimCap);
SiteOperator zero_operator(int d, int n, long cap = kDefaultDimCap);

/// V_p |i_0 ... i_{n-1}> = |i_{p^{-1}(0)} ... i_{p^{-1}(n-1)}>.
SiteOperator permutation_operator(const Permutation& p, int d, long cap = kDefaultDimCap);

/// Basis remap of the permutation operator: index_map[x] is the basis index
/// V_p sends e_x to.
std::vector<long> permutation_index_map(const Permutation& p, int d, int n,
                                        long cap = kDefaultDimCap);

/// V_p op V_p^{-1}.
SiteOperator conjugate_by_permutation(const SiteOperator& op, const Permutation& p);

/// a acting on its sites followed by b on fresh sites.
SiteOperator kron(const SiteOperator& a, const SiteOperator& b);

/// op on the first op.site_count sites, identity on the rest.
SiteOperator embed_front(const SiteOperator& op, int total_sites, long cap = kDefaultDimCap);

/// Transpose of the listed tensor legs (0-based sites).
SiteOperator partial_transpose(const SiteOperator& op, const std::vector<int>& sites);

/// Trace out the listed sites; remaining sites keep their relative order.
SiteOperator partial_trace(const SiteOperator& op, const std::vector<int>& sites);

}  // namespace mpbt
