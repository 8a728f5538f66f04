#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

#include "mpbt/irrep.hpp"
#include "mpbt/site_operator.hpp"

namespace mpbt::detail {

inline double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Eigen::MatrixXcd random_matrix(long rows, long cols, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) m(i, j) = std::complex<double>(u(rng), u(rng));
    }
    return m;
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(img[i], img[pick(rng)]);
    }
    return Permutation(std::move(img));
}

struct Triplet {
    long row, col;
    std::complex<double> value;
};

inline std::vector<Triplet> nonzeros(const Eigen::MatrixXcd& m) {
    std::vector<Triplet> out;
    for (long c = 0; c < m.cols(); ++c) {
        for (long r = 0; r < m.rows(); ++r) {
            if (m(r, c) != std::complex<double>(0.0, 0.0)) out.push_back({r, c, m(r, c)});
        }
    }
    return out;
}

inline Eigen::MatrixXcd sparse_left_multiply(const std::vector<Triplet>& sparse,
                                             const Eigen::MatrixXcd& dense) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dense.rows(), dense.cols());
    for (const Triplet& t : sparse) out.row(t.row) += t.value * dense.row(t.col);
    return out;
}

/// Tableau index at the top layer split into its descending chain down to
/// the given layer plus the position inside that block.
struct PathInner {
    LatticePath path;
    int inner = 0;
};

inline PathInner split_index(const YoungOrthogonalRep& rep, int layer_boxes, int index) {
    for (const auto& block : rep.restriction_blocks(layer_boxes)) {
        if (index >= block.begin && index < block.begin + block.size) {
            return {block.path, index - block.begin};
        }
    }
    throw std::out_of_range("tableau index outside every block");
}

}  // namespace mpbt::detail
