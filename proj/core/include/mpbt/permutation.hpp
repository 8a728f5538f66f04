#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mpbt {

/// Element of S(n) in one-line notation, 0-based: point i maps to image(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    static Permutation adjacent(int n, int i);  // swaps i and i+1

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// Same mapping on the first size() points, identity on the rest.
    Permutation embedded(int n) const;
    bool is_identity() const;

    /// Group multiplication: (p * q)(i) = p(q(i)), q applied first.
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

    std::string str() const;  // one-line, 1-based: "[2 1 3]"

private:
    std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int n);

/// Enumerates S(n) by plain changes: each permutation after the first
/// differs from its predecessor by a swap of one-line positions (i, i+1),
/// i.e. right multiplication by the adjacent transposition. The callback
/// receives the permutation and that i (-1 for the initial identity).
void for_each_permutation_plain_changes(int n,
                                        const std::function<void(const Permutation&, int)>& fn);

/// Representatives of the cosets of S(subgroup_n) inside S(group_n), where
/// the subgroup permutes {0..subgroup_n-1} and fixes the remaining points.
/// Each representative is the canonical extension of a distinct injection of
/// the fixed points; identity first, then lexicographic in the injection.
std::vector<Permutation> coset_transversal(int group_n, int subgroup_n);

}  // namespace mpbt
