#include "mpbt/young.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "mpbt/rational.hpp"

namespace mpbt {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1) throw std::invalid_argument("diagram rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw std::invalid_argument("diagram rows must be weakly decreasing");
        }
        boxes_ += rows_[i];
    }
}

int YoungDiagram::row(int i) const {
    return (i >= 0 && i < row_count()) ? rows_[i] : 0;
}

bool YoungDiagram::contains(const YoungDiagram& inner) const {
    if (inner.row_count() > row_count()) return false;
    for (int i = 0; i < inner.row_count(); ++i) {
        if (inner.rows_[i] > rows_[i]) return false;
    }
    return true;
}

YoungDiagram YoungDiagram::transposed() const {
    if (rows_.empty()) return {};
    std::vector<int> cols(rows_[0], 0);
    for (int r : rows_) {
        for (int c = 0; c < r; ++c) ++cols[c];
    }
    return YoungDiagram(std::move(cols));
}

std::string YoungDiagram::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rows_[i]);
    }
    s += ')';
    return s;
}

bool lex_less(const YoungDiagram& a, const YoungDiagram& b) {
    return std::lexicographical_compare(a.rows().begin(), a.rows().end(), b.rows().begin(),
                                        b.rows().end());
}

bool operator<(const YoungDiagram& a, const YoungDiagram& b) { return lex_less(a, b); }

namespace {

void emit_partitions(int remaining, int max_part, int rows_left, std::vector<int>& acc,
                     std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        emit_partitions(remaining - part, part, rows_left - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n, int max_rows) {
    if (n < 0) throw std::invalid_argument("partitions of negative number");
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    emit_partitions(n, n == 0 ? 1 : n, max_rows <= 0 ? n : max_rows, acc, out);
    return out;
}

std::int64_t hook_length_dimension(const YoungDiagram& mu) {
    const int n = mu.boxes();
    if (n == 0) return 1;
    const YoungDiagram t = mu.transposed();
    std::int64_t hooks = 1;  // product of hooks divides n! exactly
    for (int r = 0; r < mu.row_count(); ++r) {
        for (int c = 0; c < mu.row(r); ++c) {
            hooks = checked_mul(hooks, (mu.row(r) - c) + (t.row(c) - r) - 1);
        }
    }
    return factorial(n) / hooks;
}

std::int64_t weyl_multiplicity(const YoungDiagram& mu, int d) {
    if (d < 1) throw std::invalid_argument("local dimension must be positive");
    if (mu.row_count() > d) return 0;
    Rational prod(1);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            prod *= Rational(mu.row(i) - mu.row(j) + j - i, j - i);
        }
    }
    if (prod.den() != 1) throw std::logic_error("Weyl product is not an integer");
    return prod.num();
}

bool covers(const YoungDiagram& mu, const YoungDiagram& alpha) {
    return mu.boxes() == alpha.boxes() + 1 && mu.contains(alpha);
}

std::vector<YoungDiagram> add_box(const YoungDiagram& mu, int max_rows) {
    std::vector<YoungDiagram> out;
    const int rc = mu.row_count();
    for (int r = 0; r <= rc; ++r) {
        if (r == rc && max_rows > 0 && rc + 1 > max_rows) continue;
        if (r > 0 && mu.row(r) == mu.row(r - 1)) continue;  // would break monotonicity
        std::vector<int> rows = mu.rows();
        if (r == rc) {
            rows.push_back(1);
        } else {
            ++rows[r];
        }
        out.emplace_back(std::move(rows));
    }
    return out;
}

std::vector<YoungDiagram> remove_box(const YoungDiagram& mu) {
    std::vector<YoungDiagram> out;
    for (int r = 0; r < mu.row_count(); ++r) {
        if (mu.row(r) == mu.row(r + 1)) continue;  // not a corner
        std::vector<int> rows = mu.rows();
        if (--rows[r] == 0) rows.pop_back();
        out.emplace_back(std::move(rows));
    }
    return out;
}

std::int64_t path_count(const YoungDiagram& mu, const YoungDiagram& alpha, int max_rows) {
    if (mu.boxes() < alpha.boxes()) return 0;
    if (max_rows > 0 && (mu.row_count() > max_rows || alpha.row_count() > max_rows)) return 0;
    if (!mu.contains(alpha)) return 0;
    if (mu.boxes() == alpha.boxes()) return mu == alpha ? 1 : 0;
    std::int64_t total = 0;
    for (const YoungDiagram& nu : remove_box(mu)) {
        total = checked_add(total, path_count(nu, alpha, max_rows));
    }
    return total;
}

std::pair<int, int> StandardTableau::position_of(int value) const {
    for (int r = 0; r < static_cast<int>(entries.size()); ++r) {
        for (int c = 0; c < static_cast<int>(entries[r].size()); ++c) {
            if (entries[r][c] == value) return {r, c};
        }
    }
    throw std::out_of_range("value not in tableau");
}

int StandardTableau::content_of(int value) const {
    const auto [r, c] = position_of(value);
    return c - r;
}

YoungDiagram StandardTableau::restricted_shape(int m) const {
    std::vector<int> rows;
    for (const auto& row : entries) {
        int len = 0;
        while (len < static_cast<int>(row.size()) && row[len] <= m) ++len;
        if (len == 0) break;
        rows.push_back(len);
    }
    return YoungDiagram(std::move(rows));
}

std::vector<YoungDiagram> StandardTableau::chain_down_to(int m) const {
    std::vector<YoungDiagram> chain;
    for (int layer = shape.boxes(); layer >= m; --layer) {
        chain.push_back(restricted_shape(layer));
    }
    return chain;
}

std::string StandardTableau::str() const {
    std::string s;
    for (const auto& row : entries) {
        if (!s.empty()) s += " / ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) s += ' ';
            s += std::to_string(row[c]);
        }
    }
    return "[" + s + "]";
}

namespace {

void build_tableaux(const YoungDiagram& mu, std::vector<StandardTableau>& out) {
    const int n = mu.boxes();
    if (n == 0) {
        out.push_back(StandardTableau{mu, {}});
        return;
    }
    std::vector<YoungDiagram> below = remove_box(mu);
    std::reverse(below.begin(), below.end());  // lex-decreasing layer order
    for (const YoungDiagram& nu : below) {
        std::vector<StandardTableau> sub;
        build_tableaux(nu, sub);
        for (StandardTableau& t : sub) {
            StandardTableau full{mu, std::move(t.entries)};
            // place n in the unique box of mu / nu
            for (int r = 0; r < mu.row_count(); ++r) {
                if (mu.row(r) != nu.row(r)) {
                    if (r == static_cast<int>(full.entries.size())) full.entries.emplace_back();
                    full.entries[r].push_back(n);
                    break;
                }
            }
            out.push_back(std::move(full));
        }
    }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const YoungDiagram& mu) {
    std::vector<StandardTableau> out;
    build_tableaux(mu, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const YoungDiagram& d) { return os << d.str(); }

}  // namespace mpbt
