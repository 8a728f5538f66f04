#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "mpbt/rational.hpp"
#include "mpbt/young.hpp"

using namespace mpbt;

namespace {

// independent oracle: count partitions of n into at most max_rows parts
long count_partitions(int n, int max_part, int rows_left) {
    if (n == 0) return 1;
    if (rows_left == 0 || max_part == 0) return 0;
    long total = 0;
    for (int part = std::min(n, max_part); part >= 1; --part) {
        total += count_partitions(n - part, part, rows_left - 1);
    }
    return total;
}

// independent oracle: standard fillings by trying every permutation
long count_standard_fillings(const YoungDiagram& shape) {
    const int n = shape.boxes();
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    long count = 0;
    do {
        std::vector<std::vector<int>> grid(shape.row_count());
        int pos = 0;
        for (int r = 0; r < shape.row_count(); ++r) {
            for (int c = 0; c < shape.row(r); ++c) grid[r].push_back(values[pos++]);
        }
        bool ok = true;
        for (int r = 0; r < shape.row_count() && ok; ++r) {
            for (int c = 0; c < shape.row(r) && ok; ++c) {
                if (c + 1 < shape.row(r) && grid[r][c] > grid[r][c + 1]) ok = false;
                if (r + 1 < shape.row_count() && c < shape.row(r + 1) && grid[r][c] > grid[r + 1][c])
                    ok = false;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(values.begin(), values.end()));
    return count;
}

// independent oracle: walk every ascending chain
long count_paths(const YoungDiagram& mu, const YoungDiagram& alpha, int max_rows) {
    if (!mu.contains(alpha)) return 0;
    if (mu.boxes() == alpha.boxes()) return mu == alpha ? 1 : 0;
    long total = 0;
    for (const YoungDiagram& up : add_box(alpha, max_rows)) {
        if (mu.contains(up)) total += count_paths(mu, up, max_rows);
    }
    return total;
}

}  // namespace

TEST_CASE("diagram enumeration") {
    auto two = partitions_of(2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == YoungDiagram({2}));
    CHECK(two[1] == YoungDiagram({1, 1}));

    auto three = partitions_of(3, 2);
    REQUIRE(three.size() == 2);
    CHECK(three[0] == YoungDiagram({3}));
    CHECK(three[1] == YoungDiagram({2, 1}));

    CHECK(partitions_of(6, 6).size() == count_partitions(6, 6, 6));
    CHECK(partitions_of(6, 6).size() == 11);

    auto zero = partitions_of(0, 1);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].boxes() == 0);

    // lexicographically decreasing order
    for (int n = 1; n <= 8; ++n) {
        auto all = partitions_of(n);
        CHECK(all.size() == static_cast<std::size_t>(count_partitions(n, n, n)));
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(lex_less(all[i], all[i - 1]));
    }
}

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(YoungDiagram({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram({2, 0}), std::invalid_argument);
    CHECK(YoungDiagram({3, 1}).transposed() == YoungDiagram({2, 1, 1}));
    CHECK(YoungDiagram({3, 1}).str() == "(3,1)");
}

TEST_CASE("hook length dimension") {
    CHECK(hook_length_dimension(YoungDiagram({1})) == 1);
    CHECK(hook_length_dimension(YoungDiagram({2, 1})) == 2);
    CHECK(hook_length_dimension(YoungDiagram({2, 1})) ==
          count_standard_fillings(YoungDiagram({2, 1})));
    for (int n = 1; n <= 8; ++n) {
        CHECK(hook_length_dimension(YoungDiagram({n})) == 1);
    }
    // matches tableau enumeration, transpose-symmetric
    for (int n = 1; n <= 8; ++n) {
        for (const YoungDiagram& mu : partitions_of(n)) {
            CHECK(hook_length_dimension(mu) ==
                  static_cast<std::int64_t>(standard_tableaux(mu).size()));
            CHECK(hook_length_dimension(mu) == hook_length_dimension(mu.transposed()));
        }
    }
    for (const YoungDiagram& mu : partitions_of(6)) {
        CHECK(hook_length_dimension(mu) == count_standard_fillings(mu));
    }
}

TEST_CASE("Weyl multiplicity") {
    for (int d = 2; d <= 5; ++d) {
        CHECK(weyl_multiplicity(YoungDiagram({1}), d) == d);
    }
    CHECK(weyl_multiplicity(YoungDiagram({2, 1}), 2) == 2);
    CHECK(weyl_multiplicity(YoungDiagram({1, 1, 1}), 2) == 0);

    // Schur-Weyl completeness: mult * dim fills the full space
    for (int d : {2, 3}) {
        for (int n = 1; n <= 8; ++n) {
            std::int64_t total = 0;
            for (const YoungDiagram& mu : partitions_of(n, d)) {
                total += checked_mul(weyl_multiplicity(mu, d), hook_length_dimension(mu));
            }
            CHECK(total == ipow(d, n));
        }
    }
}

TEST_CASE("lattice navigation") {
    CHECK(covers(YoungDiagram({2}), YoungDiagram({1})));
    CHECK_FALSE(covers(YoungDiagram({2, 1}), YoungDiagram({1})));

    auto removed = remove_box(YoungDiagram({2, 1}));
    REQUIRE(removed.size() == 2);
    CHECK(removed[0] == YoungDiagram({1, 1}));
    CHECK(removed[1] == YoungDiagram({2}));

    auto added = add_box(YoungDiagram({1}), 2);
    REQUIRE(added.size() == 2);
    CHECK(added[0] == YoungDiagram({2}));
    CHECK(added[1] == YoungDiagram({1, 1}));

    CHECK(add_box(YoungDiagram({1, 1}), 2).size() == 1);  // row bound bites
    CHECK(add_box(YoungDiagram({1, 1})).size() == 2);
}

TEST_CASE("path counting") {
    CHECK(path_count(YoungDiagram({2}), YoungDiagram({1})) == 1);
    CHECK(path_count(YoungDiagram({2, 1}), YoungDiagram({1})) == 2);
    CHECK(path_count(YoungDiagram({2, 1}), YoungDiagram({1})) ==
          count_paths(YoungDiagram({2, 1}), YoungDiagram({1}), 0));
    CHECK(path_count(YoungDiagram({3}), YoungDiagram({1, 1})) == 0);

    for (int n = 2; n <= 8; ++n) {
        for (const YoungDiagram& mu : partitions_of(n)) {
            CHECK(path_count(mu, mu) == 1);
            for (const YoungDiagram& alpha : partitions_of(n - 1)) {
                CHECK(path_count(mu, alpha) == (covers(mu, alpha) ? 1 : 0));
            }
            // layer recursion, up to three layers down
            for (int down = 1; down <= 3 && n - down >= 0; ++down) {
                for (const YoungDiagram& alpha : partitions_of(n - down)) {
                    std::int64_t via_layer = 0;
                    for (const YoungDiagram& nu : remove_box(mu)) {
                        if (nu.contains(alpha)) via_layer += path_count(nu, alpha);
                    }
                    CHECK(path_count(mu, alpha) == via_layer);
                    CHECK(path_count(mu, alpha) == count_paths(mu, alpha, 0));
                }
            }
        }
    }

    // the reduced lattice drops paths through tall diagrams
    CHECK(path_count(YoungDiagram({3, 1}), YoungDiagram({2}), 2) == 2);
    CHECK(path_count(YoungDiagram({2, 1, 1}), YoungDiagram({1}), 2) == 0);
}

TEST_CASE("standard tableaux") {
    CHECK(standard_tableaux(YoungDiagram({2})).size() == 1);
    CHECK(standard_tableaux(YoungDiagram({2, 1})).size() == 2);
    CHECK(standard_tableaux(YoungDiagram({2, 2})).size() == 2);

    // last-letter order: restriction chains sorted layer by layer with
    // larger diagrams first
    for (int n = 2; n <= 7; ++n) {
        for (const YoungDiagram& mu : partitions_of(n)) {
            const auto tabs = standard_tableaux(mu);
            for (std::size_t t = 1; t < tabs.size(); ++t) {
                const auto prev = tabs[t - 1].chain_down_to(1);
                const auto cur = tabs[t].chain_down_to(1);
                bool decided = false;
                for (std::size_t layer = 0; layer < cur.size() && !decided; ++layer) {
                    if (prev[layer] != cur[layer]) {
                        CHECK(lex_less(cur[layer], prev[layer]));
                        decided = true;
                    }
                }
                CHECK(decided);  // distinct tableaux have distinct chains
            }
        }
    }

    const auto tabs = standard_tableaux(YoungDiagram({2, 2}));
    CHECK(tabs[0].restricted_shape(2) == YoungDiagram({2}));
    CHECK(tabs[1].restricted_shape(2) == YoungDiagram({1, 1}));
}

TEST_CASE("exact arithmetic helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(8, 2) == 28);
    CHECK(ipow(3, 7) == 2187);
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(3, 4) * Rational(2, 3)).str() == "1/2");
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2).num() == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(factorial(30), std::overflow_error);
    CHECK(Rational(7, 40).to_double() == doctest::Approx(0.175));
}
