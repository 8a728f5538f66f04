#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mpbt {

/// Integer partition drawn as a left-justified array of boxes. Rows are
/// weakly decreasing positive integers; the empty diagram is the unique
/// partition of 0.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);

    int boxes() const { return boxes_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int row(int i) const;  // 0 for rows beyond the diagram
    const std::vector<int>& rows() const { return rows_; }

    bool contains(const YoungDiagram& inner) const;  // inner fits box-wise
    YoungDiagram transposed() const;

    std::string str() const;  // "(3,1)", empty diagram "()"

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const YoungDiagram& a, const YoungDiagram& b) { return !(a == b); }

private:
    std::vector<int> rows_;
    int boxes_ = 0;
};

// Row-list lexicographic order ((1,1) < (2) < (2,1) < (3)); enumeration
// functions emit diagrams in decreasing order of this comparison.
bool lex_less(const YoungDiagram& a, const YoungDiagram& b);
bool operator<(const YoungDiagram& a, const YoungDiagram& b);

/// All partitions of n with at most max_rows parts, lexicographically
/// decreasing. max_rows <= 0 means unbounded.
std::vector<YoungDiagram> partitions_of(int n, int max_rows = 0);

/// Hook length formula: n! / prod of hook lengths. Equals the number of
/// standard tableaux of the shape.
std::int64_t hook_length_dimension(const YoungDiagram& mu);

/// Weyl dimension formula for the multiplicity of the shape in the
/// Schur-Weyl decomposition of (C^d)^{x n}; 0 when the shape has more than
/// d rows.
std::int64_t weyl_multiplicity(const YoungDiagram& mu, int d);

/// True iff mu is obtained from alpha by adding exactly one box.
bool covers(const YoungDiagram& mu, const YoungDiagram& alpha);

/// One layer up/down the Young lattice, in top-to-bottom corner order.
/// add_box honours an optional row bound for the reduced lattice.
std::vector<YoungDiagram> add_box(const YoungDiagram& mu, int max_rows = 0);
std::vector<YoungDiagram> remove_box(const YoungDiagram& mu);

/// Number of monotone one-box-per-step paths from alpha up to mu on the
/// lattice restricted to max_rows rows (unbounded when max_rows <= 0).
std::int64_t path_count(const YoungDiagram& mu, const YoungDiagram& alpha, int max_rows = 0);

/// Bijective filling of a shape, increasing along rows and down columns.
struct StandardTableau {
    YoungDiagram shape;
    std::vector<std::vector<int>> entries;  // entries[r][c] in 1..n

    std::pair<int, int> position_of(int value) const;  // (row, col), 0-based
    int content_of(int value) const;                   // col - row
    /// Shape spanned by the entries 1..m.
    YoungDiagram restricted_shape(int m) const;
    /// Restriction chain [shape, shape_{n-1}, ..., shape_m]; one diagram per
    /// layer from n down to m.
    std::vector<YoungDiagram> chain_down_to(int m) const;
    std::string str() const;
};

/// All standard tableaux of the shape in last-letter order: chains of
/// restricted shapes compared layer by layer from the top, diagrams in
/// decreasing lexicographic order. Restriction chains of any subgroup layer
/// are contiguous index ranges in this order.
std::vector<StandardTableau> standard_tableaux(const YoungDiagram& mu);

std::ostream& operator<<(std::ostream& os, const YoungDiagram& d);

}  // namespace mpbt
