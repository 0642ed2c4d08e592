#pragma once

#include "parastat/algebra_element.hpp"
#include "parastat/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parastat {

// Row index of the creation operator c_i^+ in the GZ chain: 2i for i>0,
// -2i-1 for i<0.
int rho(int i);

// Inverse of rho: the mode whose tensor pattern starts changing at row r.
int rho_inverse(int r);

// One row of a GZ pattern, negative-index entries in display order
// (m_{-q}, ..., m_{-1}) followed by positive-index entries (m_1, ..., m_q').
struct GZRow {
    std::vector<int> neg;
    std::vector<int> pos;
    bool operator==(const GZRow &o) const { return neg == o.neg && pos == o.pos; }
    bool operator<(const GZRow &o) const {
        return neg != o.neg ? neg < o.neg : pos < o.pos;
    }
};

// Triangular GZ array for rank n: rows r = 1..2n, where row 2s holds
// (m_{-s,2s},...,m_{-1,2s}; m_{1,2s},...,m_{s,2s}) and row 2s-1 drops the
// last positive entry.
struct GZPattern {
    int n = 0;
    std::vector<GZRow> rows; // rows[r-1] is row r

    const GZRow &row(int r) const { return rows[r - 1]; }
    GZRow &row(int r) { return rows[r - 1]; }
    // m_{i,r}; i nonzero, valid for the row's shape.
    int entry(int i, int r) const;
    long row_sum(int r) const;

    static GZPattern zero(int n);

    bool operator==(const GZPattern &o) const { return n == o.n && rows == o.rows; }
    bool operator!=(const GZPattern &o) const { return !(*this == o); }
    bool operator<(const GZPattern &o) const {
        return n != o.n ? n < o.n : rows < o.rows;
    }
};

// Top row [m]^{2n} on its own, for enumeration entry points.
struct TopRow {
    int n = 0;
    std::vector<int> neg; // m_{-n}..m_{-1}
    std::vector<int> pos; // m_1..m_n
    long sum() const;
    bool operator==(const TopRow &o) const {
        return n == o.n && neg == o.neg && pos == o.pos;
    }
    bool operator<(const TopRow &o) const;
    std::string str() const;
};

struct GzVerdict {
    bool ok = true;
    std::string condition; // first violated condition when !ok
    std::string detail;
};

// Shape and nonnegativity plus the seven branching conditions of the finite
// GZ basis (top-row dominance and counting condition; the two theta
// conditions; the two counting conditions; the two in-betweenness
// conditions). Malformed shapes are reported distinctly.
GzVerdict validate_finite(const GZPattern &p);

// The re-indexed condition list used for the infinite-rank basis, applied to
// a finite body. Equivalent to conditions 2-7 above; both are implemented
// verbatim and the equivalence is asserted by tests rather than assumed.
GzVerdict validate_stable_body(const GZPattern &p);

// Top-row admissibility: weakly decreasing on each side, nonnegative, and
// m_{-1} >= #{i>0 : m_i > 0}.
GzVerdict validate_top(const TopRow &t);

// All patterns with the given top row, generated row by row downward,
// entries chosen lexicographically. Throws on an invalid top row.
std::vector<GZPattern> enumerate_patterns(const TopRow &top);

// Weight of the order-p vacuum: -p/2 on negative modes, +p/2 on positive.
WeightVector vacuum_weight(int n, const Rational &p);

// Vacuum weight plus sum over rows of (row sum difference) * eps_{rho^-1(r)}.
WeightVector pattern_weight(const GZPattern &pat, const Rational &p);

// Top rows [m]_{+(k)} reachable by adding a box, filtered by top-row
// admissibility.
std::vector<TopRow> tensor_branch(const TopRow &top);

// Smallest s such that rows s..2n all equal [nu;0] for one partition nu;
// absent when the top row has a nonzero positive part.
std::optional<int> stability_index(const GZPattern &p);

// phi_{2n,+2}: repeats the top row (padded with zeros) twice on top,
// producing a rank n+1 pattern. Requires zero positive part in the top row.
GZPattern phi_extend(const GZPattern &p);

// Row-stable infinite pattern: finite body of rank s (rows 1..2s) whose top
// row equals [nu;0]; all rows above are implied copies of [nu;0].
struct InfiniteGZPattern {
    std::vector<int> nu; // partition, no trailing zeros
    GZPattern body;      // rank = stability_index/2 after normalization

    int stability() const { return 2 * body.n; }
    // Canonical form: body cut at the minimal even stable row index.
    InfiniteGZPattern normalized() const;
    bool operator==(const InfiniteGZPattern &o) const;
};

InfiniteGZPattern phi_to_infinite(const GZPattern &p);
GZPattern phi_from_infinite(const InfiniteGZPattern &p, int two_s);

GzVerdict validate_infinite(const InfiniteGZPattern &p, long order_p);

// Number of valid patterns per weight with top-row total L, optionally
// subject to the order-p cutoff m_{-n,2n} <= p.
enum class Cutoff { apply, ignore };
std::map<WeightVector, long> count_basis(int n, long p, int level, Cutoff cutoff = Cutoff::apply);

// All admissible top rows with the given total, optionally cut off.
std::vector<TopRow> enumerate_tops(int n, long p, int level, Cutoff cutoff);

} // namespace parastat
