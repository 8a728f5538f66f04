#include "mpbt/site_operator.hpp"

#include <algorithm>
#include <string>

namespace mpbt {

long site_space_dim(int d, int n, long cap) {
    if (d < 2 || n < 0) throw std::invalid_argument("bad site space parameters");
    long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > cap) {
            throw DimensionCapError("site space dimension " + std::to_string(d) + "^" +
                                    std::to_string(n) + " exceeds cap " + std::to_string(cap));
        }
    }
    return dim;
}

SiteOperator identity_operator(int d, int n, long cap) {
    const long dim = site_space_dim(d, n, cap);
    return {Eigen::MatrixXcd::Identity(dim, dim), d, n};
}

SiteOperator zero_operator(int d, int n, long cap) {
    const long dim = site_space_dim(d, n, cap);
    return {Eigen::MatrixXcd::Zero(dim, dim), d, n};
}

std::vector<long> permutation_index_map(const Permutation& p, int d, int n, long cap) {
    if (p.size() != n) throw std::invalid_argument("permutation size does not match site count");
    const long dim = site_space_dim(d, n, cap);
    const Permutation pinv = p.inverse();
    std::vector<long> stride(n);
    long s = 1;
    for (int j = n - 1; j >= 0; --j) {
        stride[j] = s;
        s *= d;
    }
    std::vector<long> map(dim);
    std::vector<int> digits(n);
    for (long x = 0; x < dim; ++x) {
        long rest = x;
        for (int j = 0; j < n; ++j) {
            digits[j] = static_cast<int>(rest / stride[j]);
            rest %= stride[j];
        }
        long y = 0;
        for (int j = 0; j < n; ++j) y += static_cast<long>(digits[pinv(j)]) * stride[j];
        map[x] = y;
    }
    return map;
}

SiteOperator permutation_operator(const Permutation& p, int d, long cap) {
    const int n = p.size();
    SiteOperator out = zero_operator(d, n, cap);
    const std::vector<long> map = permutation_index_map(p, d, n, cap);
    for (long x = 0; x < out.dim(); ++x) out.mat(map[x], x) = 1.0;
    return out;
}

SiteOperator conjugate_by_permutation(const SiteOperator& op, const Permutation& p) {
    const std::vector<long> map =
        permutation_index_map(p, op.local_dim, op.site_count, op.dim());
    SiteOperator out{Eigen::MatrixXcd::Zero(op.dim(), op.dim()), op.local_dim, op.site_count};
    for (long x = 0; x < op.dim(); ++x) {
        for (long y = 0; y < op.dim(); ++y) out.mat(map[x], map[y]) = op.mat(x, y);
    }
    return out;
}

SiteOperator kron(const SiteOperator& a, const SiteOperator& b) {
    if (a.local_dim != b.local_dim && a.site_count != 0 && b.site_count != 0) {
        throw std::invalid_argument("kron of operators with different local dimensions");
    }
    const long da = a.dim(), db = b.dim();
    SiteOperator out{Eigen::MatrixXcd(da * db, da * db),
                     a.site_count ? a.local_dim : b.local_dim, a.site_count + b.site_count};
    for (long i = 0; i < da; ++i) {
        for (long j = 0; j < da; ++j) {
            out.mat.block(i * db, j * db, db, db) = a.mat(i, j) * b.mat;
        }
    }
    return out;
}

SiteOperator embed_front(const SiteOperator& op, int total_sites, long cap) {
    if (total_sites == op.site_count) return op;
    if (total_sites < op.site_count) throw std::invalid_argument("embedding into fewer sites");
    return kron(op, identity_operator(op.local_dim, total_sites - op.site_count, cap));
}

namespace {

void check_sites(const SiteOperator& op, const std::vector<int>& sites) {
    for (int s : sites) {
        if (s < 0 || s >= op.site_count) throw std::invalid_argument("site index out of range");
    }
}

std::vector<long> site_strides(int d, int n) {
    std::vector<long> stride(n);
    long s = 1;
    for (int j = n - 1; j >= 0; --j) {
        stride[j] = s;
        s *= d;
    }
    return stride;
}

}  // namespace

SiteOperator partial_transpose(const SiteOperator& op, const std::vector<int>& sites) {
    check_sites(op, sites);
    const int d = op.local_dim, n = op.site_count;
    const std::vector<long> stride = site_strides(d, n);
    SiteOperator out{Eigen::MatrixXcd(op.dim(), op.dim()), d, n};
    for (long x = 0; x < op.dim(); ++x) {
        for (long y = 0; y < op.dim(); ++y) {
            long xt = x, yt = y;
            for (int s : sites) {
                const int xd = static_cast<int>((x / stride[s]) % d);
                const int yd = static_cast<int>((y / stride[s]) % d);
                xt += static_cast<long>(yd - xd) * stride[s];
                yt += static_cast<long>(xd - yd) * stride[s];
            }
            out.mat(xt, yt) = op.mat(x, y);
        }
    }
    return out;
}

SiteOperator partial_trace(const SiteOperator& op, const std::vector<int>& sites) {
    check_sites(op, sites);
    const int d = op.local_dim, n = op.site_count;
    std::vector<int> traced = sites;
    std::sort(traced.begin(), traced.end());
    traced.erase(std::unique(traced.begin(), traced.end()), traced.end());
    std::vector<int> kept;
    for (int j = 0; j < n; ++j) {
        if (!std::binary_search(traced.begin(), traced.end(), j)) kept.push_back(j);
    }
    const std::vector<long> stride = site_strides(d, n);
    const int nk = static_cast<int>(kept.size());
    const int nt = static_cast<int>(traced.size());
    long kdim = 1;
    for (int i = 0; i < nk; ++i) kdim *= d;
    long tdim = 1;
    for (int i = 0; i < nt; ++i) tdim *= d;

    auto expand = [&](long packed, const std::vector<int>& positions) {
        long full = 0;
        for (int j = static_cast<int>(positions.size()) - 1; j >= 0; --j) {
            full += (packed % d) * stride[positions[j]];
            packed /= d;
        }
        return full;
    };
    std::vector<long> kept_index(kdim), traced_index(tdim);
    for (long a = 0; a < kdim; ++a) kept_index[a] = expand(a, kept);
    for (long t = 0; t < tdim; ++t) traced_index[t] = expand(t, traced);

    SiteOperator out{Eigen::MatrixXcd::Zero(kdim, kdim), d, nk};
    for (long a = 0; a < kdim; ++a) {
        for (long b = 0; b < kdim; ++b) {
            std::complex<double> acc = 0.0;
            for (long t = 0; t < tdim; ++t) {
                acc += op.mat(kept_index[a] + traced_index[t], kept_index[b] + traced_index[t]);
            }
            out.mat(a, b) = acc;
        }
    }
    return out;
}

}  // namespace mpbt
