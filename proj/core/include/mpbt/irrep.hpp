#pragma once

#include <Eigen/Dense>

#include <vector>

#include "mpbt/permutation.hpp"
#include "mpbt/young.hpp"

namespace mpbt {

/// Real orthogonal matrix of one irreducible representation evaluated at one
/// permutation, in the basis of standard tableaux (last-letter order).
struct IrrepMatrix {
    YoungDiagram diagram;
    Eigen::MatrixXd entries;
};

/// A descending chain of diagrams differing by one box per step,
/// chain.front() the largest, chain.back() the smallest.
using LatticePath = std::vector<YoungDiagram>;

/// All descending one-box-per-step chains from mu to alpha on the lattice
/// with at most max_rows rows (unbounded when max_rows <= 0), ordered the
/// way the corresponding index blocks appear in the tableau basis.
std::vector<LatticePath> lattice_paths(const YoungDiagram& mu, const YoungDiagram& alpha,
                                       int max_rows = 0);

/// Irreducible representation of S(n) in Young's orthogonal form, adapted to
/// the chain S(1) < S(2) < ... < S(n) where S(m) permutes {0..m-1}. Matrices
/// are built from the adjacent-transposition generators via the axial
/// distance rule; they are real orthogonal and restriction to any chain
/// subgroup is block diagonal on contiguous index ranges.
class YoungOrthogonalRep {
public:
    explicit YoungOrthogonalRep(YoungDiagram mu);

    const YoungDiagram& diagram() const { return mu_; }
    int box_count() const { return mu_.boxes(); }
    int dimension() const { return static_cast<int>(tableaux_.size()); }
    const std::vector<StandardTableau>& tableaux() const { return tableaux_; }

    /// Matrix of the adjacent transposition (i, i+1), 0 <= i < n-1.
    const Eigen::MatrixXd& generator(int i) const;
    Eigen::MatrixXd matrix(const Permutation& p) const;

    struct RestrictionBlock {
        YoungDiagram sub;   // diagram at the subgroup layer
        LatticePath path;   // chain from diagram() down to sub
        int begin = 0;      // first tableau index of the block
        int size = 0;       // equals hook_length_dimension(sub)
    };
    /// Contiguous index ranges on which every kappa in S(m) acts block
    /// diagonally; block (sub, path) carries exactly the S(m) irrep of sub.
    std::vector<RestrictionBlock> restriction_blocks(int m) const;

    /// First tableau index of the block labelled by the given chain
    /// (path.front() must equal diagram()); throws if no such block.
    int block_begin(const LatticePath& path) const;

private:
    YoungDiagram mu_;
    std::vector<StandardTableau> tableaux_;
    std::vector<Eigen::MatrixXd> generators_;
};

/// Convenience wrapper over a process-wide thread-safe cache of
/// YoungOrthogonalRep objects.
const YoungOrthogonalRep& cached_rep(const YoungDiagram& mu);
IrrepMatrix young_orthogonal_rep(const YoungDiagram& mu, const Permutation& p);

/// Max elementwise deviation of the transversal bilinear sum
///   sum_t sum_{k} block(mu, t^{-1})[r_mu_alpha, r_mu_beta]_{i k}
///                 block(nu, t)[r_nu_beta, r_nu_gamma]_{k j}
/// from its closed form
///   (n!/|H|) (d_beta/d_mu) delta(r_mu_alpha, r_nu_gamma)
///   delta(r_mu_beta, r_nu_beta) delta_ij,
/// where H = S(subgroup_size) and t runs over coset_transversal; the rule
/// needs the chain transversal built there, a generic transversal breaks it.
/// The two middle paths must end at the same diagram; otherwise the blocks
/// cannot be composed and std::invalid_argument is thrown.
double transversal_block_sum_residual(const YoungOrthogonalRep& mu, const YoungOrthogonalRep& nu,
                                      int subgroup_size, const LatticePath& r_mu_alpha,
                                      const LatticePath& r_mu_beta, const LatticePath& r_nu_beta,
                                      const LatticePath& r_nu_gamma);

}  // namespace mpbt
