#include "mpbt/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace mpbt {

std::vector<LatticePath> lattice_paths(const YoungDiagram& mu, const YoungDiagram& alpha,
                                       int max_rows) {
    std::vector<LatticePath> out;
    if (mu.boxes() < alpha.boxes() || !mu.contains(alpha)) return out;
    if (max_rows > 0 && mu.row_count() > max_rows) return out;
    if (mu.boxes() == alpha.boxes()) {
        if (mu == alpha) out.push_back({mu});
        return out;
    }
    std::vector<YoungDiagram> below = remove_box(mu);
    std::reverse(below.begin(), below.end());  // lex-decreasing, matching tableau order
    for (const YoungDiagram& nu : below) {
        for (LatticePath& tail : lattice_paths(nu, alpha, max_rows)) {
            LatticePath path;
            path.reserve(tail.size() + 1);
            path.push_back(mu);
            path.insert(path.end(), tail.begin(), tail.end());
            out.push_back(std::move(path));
        }
    }
    return out;
}

YoungOrthogonalRep::YoungOrthogonalRep(YoungDiagram mu)
    : mu_(std::move(mu)), tableaux_(standard_tableaux(mu_)) {
    const int n = mu_.boxes();
    const int dim = dimension();

    // tableau lookup by row-of-value vector
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> row_of(dim, std::vector<int>(n + 1, 0));
    for (int t = 0; t < dim; ++t) {
        for (int v = 1; v <= n; ++v) row_of[t][v] = tableaux_[t].position_of(v).first;
        index[row_of[t]] = t;
    }

    generators_.reserve(std::max(n - 1, 0));
    for (int i = 0; i < n - 1; ++i) {
        const int a = i + 1, b = i + 2;  // values swapped by the generator
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
        for (int t = 0; t < dim; ++t) {
            const auto [ra, ca] = tableaux_[t].position_of(a);
            const auto [rb, cb] = tableaux_[t].position_of(b);
            if (ra == rb) {
                g(t, t) = 1.0;
            } else if (ca == cb) {
                g(t, t) = -1.0;
            } else {
                const double axial = (cb - rb) - (ca - ra);
                g(t, t) = 1.0 / axial;
                std::vector<int> swapped = row_of[t];
                std::swap(swapped[a], swapped[b]);
                const int u = index.at(swapped);
                if (u > t) {
                    const double off = std::sqrt(1.0 - 1.0 / (axial * axial));
                    g(t, u) = off;
                    g(u, t) = off;
                }
            }
        }
        generators_.push_back(std::move(g));
    }
}

const Eigen::MatrixXd& YoungOrthogonalRep::generator(int i) const {
    if (i < 0 || i >= static_cast<int>(generators_.size())) {
        throw std::out_of_range("generator index");
    }
    return generators_[i];
}

Eigen::MatrixXd YoungOrthogonalRep::matrix(const Permutation& p) const {
    if (p.size() != mu_.boxes()) {
        throw std::invalid_argument("permutation size does not match diagram");
    }
    const int dim = dimension();
    Eigen::MatrixXd phi = Eigen::MatrixXd::Identity(dim, dim);
    // bubble-sort the one-line notation; each recorded swap of positions
    // (i, i+1) right-multiplies p by the adjacent transposition, so p equals
    // the product of the recorded generators in reverse order
    std::vector<int> img = p.images();
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < static_cast<int>(img.size()); ++i) {
            if (img[i] > img[i + 1]) {
                std::swap(img[i], img[i + 1]);
                swaps.push_back(i);
                moved = true;
            }
        }
    }
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
        phi = phi * generators_[*it];
    }
    return phi;
}

std::vector<YoungOrthogonalRep::RestrictionBlock> YoungOrthogonalRep::restriction_blocks(
    int m) const {
    if (m < 0 || m > mu_.boxes()) throw std::invalid_argument("subgroup layer out of range");
    std::vector<RestrictionBlock> blocks;
    for (int t = 0; t < dimension(); ++t) {
        LatticePath chain = tableaux_[t].chain_down_to(m);
        if (!blocks.empty() && blocks.back().path == chain) {
            ++blocks.back().size;
        } else {
            blocks.push_back({chain.back(), std::move(chain), t, 1});
        }
    }
    return blocks;
}

int YoungOrthogonalRep::block_begin(const LatticePath& path) const {
    if (path.empty() || path.front() != mu_) {
        throw std::invalid_argument("path does not start at the representation's diagram");
    }
    for (const RestrictionBlock& b : restriction_blocks(path.back().boxes())) {
        if (b.path == path) return b.begin;
    }
    throw std::invalid_argument("no tableau block for the given path");
}

const YoungOrthogonalRep& cached_rep(const YoungDiagram& mu) {
    static std::mutex mutex;
    static std::map<std::vector<int>, std::unique_ptr<YoungOrthogonalRep>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[mu.rows()];
    if (!slot) slot = std::make_unique<YoungOrthogonalRep>(mu);
    return *slot;
}

IrrepMatrix young_orthogonal_rep(const YoungDiagram& mu, const Permutation& p) {
    return {mu, cached_rep(mu).matrix(p)};
}

double transversal_block_sum_residual(const YoungOrthogonalRep& mu, const YoungOrthogonalRep& nu,
                                      int subgroup_size, const LatticePath& r_mu_alpha,
                                      const LatticePath& r_mu_beta, const LatticePath& r_nu_beta,
                                      const LatticePath& r_nu_gamma) {
    const int n = mu.box_count();
    if (nu.box_count() != n) throw std::invalid_argument("diagrams of different box count");
    if (r_mu_beta.back() != r_nu_beta.back()) {
        throw std::invalid_argument("middle blocks end at different diagrams");
    }

    const int mu_a = mu.block_begin(r_mu_alpha);
    const int mu_b = mu.block_begin(r_mu_beta);
    const int nu_b = nu.block_begin(r_nu_beta);
    const int nu_g = nu.block_begin(r_nu_gamma);
    const int d_alpha = static_cast<int>(hook_length_dimension(r_mu_alpha.back()));
    const int d_beta = static_cast<int>(hook_length_dimension(r_mu_beta.back()));
    const int d_gamma = static_cast<int>(hook_length_dimension(r_nu_gamma.back()));

    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d_alpha, d_gamma);
    const std::vector<Permutation> transversal = coset_transversal(n, subgroup_size);
    for (const Permutation& t : transversal) {
        const Eigen::MatrixXd left = mu.matrix(t.inverse());
        const Eigen::MatrixXd right = nu.matrix(t);
        sum += left.block(mu_a, mu_b, d_alpha, d_beta) * right.block(nu_b, nu_g, d_beta, d_gamma);
    }

    // nonzero only when the outer chains agree and the two middle chains
    // agree; the group-average argument kills everything else
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(d_alpha, d_gamma);
    if (mu.diagram() == nu.diagram() && r_mu_alpha == r_nu_gamma && r_mu_beta == r_nu_beta) {
        const double scale = static_cast<double>(transversal.size()) * d_beta / mu.dimension();
        expected = scale * Eigen::MatrixXd::Identity(d_alpha, d_gamma);
    }
    return (sum - expected).cwiseAbs().maxCoeff();
}

}  // namespace mpbt
