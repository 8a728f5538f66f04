#include "mpbt/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mpbt {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= size() || seen[v]) {
            throw std::invalid_argument("one-line notation is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_[a], p.images_[b]);
    return p;
}

Permutation Permutation::adjacent(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int i = 0; i < size(); ++i) img[images_[i]] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::embedded(int n) const {
    if (n < size()) throw std::invalid_argument("embedding into smaller group");
    std::vector<int> img(images_);
    for (int i = size(); i < n; ++i) img.push_back(i);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("composing permutations of unequal size");
    std::vector<int> img(p.size());
    for (int i = 0; i < p.size(); ++i) img[i] = p(q(i));
    return Permutation(std::move(img));
}

std::string Permutation::str() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(images_[i] + 1);
    }
    return s + "]";
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

void for_each_permutation_plain_changes(int n,
                                        const std::function<void(const Permutation&, int)>& fn) {
    // Steinhaus-Johnson-Trotter with directions.
    std::vector<int> value(n), pos(n), dir(n, -1);
    std::iota(value.begin(), value.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
    Permutation current = Permutation::identity(n);
    fn(current, -1);
    if (n <= 1) return;
    while (true) {
        int mobile = -1;
        for (int v = n - 1; v >= 0; --v) {
            const int p = pos[v];
            const int q = p + dir[v];
            if (q < 0 || q >= n || value[q] > v) continue;
            mobile = v;
            break;
        }
        if (mobile < 0) return;
        const int p = pos[mobile];
        const int q = p + dir[mobile];
        std::swap(value[p], value[q]);
        pos[mobile] = q;
        pos[value[p]] = p;
        for (int v = mobile + 1; v < n; ++v) dir[v] = -dir[v];
        current = Permutation(std::vector<int>(value));
        fn(current, std::min(p, q));
    }
}

std::vector<Permutation> coset_transversal(int group_n, int subgroup_n) {
    if (subgroup_n < 0 || subgroup_n > group_n) {
        throw std::invalid_argument("subgroup larger than group");
    }
    // Chain transversal: one transposition per layer above the subgroup,
    // tau = (a_{m+1}, m+1)(a_{m+2}, m+2)...(a_n, n) with a_j <= j. The fixed
    // point a_j = j comes first in each layer so the identity leads.
    std::vector<Permutation> out = {Permutation::identity(group_n)};
    for (int top = subgroup_n; top < group_n; ++top) {
        std::vector<Permutation> next;
        next.reserve(out.size() * (top + 1));
        for (const Permutation& t : out) {
            next.push_back(t);  // a = top keeps the layer fixed
            for (int a = 0; a < top; ++a) {
                next.push_back(t * Permutation::transposition(group_n, a, top));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace mpbt
