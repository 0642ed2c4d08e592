#include "parastat/gz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parastat {

int rho(int i) {
    if (i == 0)
        throw std::invalid_argument("rho: 0 is not a mode");
    return i > 0 ? 2 * i : -2 * i - 1;
}

int rho_inverse(int r) {
    if (r < 1)
        throw std::invalid_argument("rho_inverse: row indices start at 1");
    return r % 2 == 0 ? r / 2 : -(r + 1) / 2;
}

int GZPattern::entry(int i, int r) const {
    const GZRow &rw = row(r);
    if (i < 0)
        return rw.neg[rw.neg.size() + i];
    return rw.pos[i - 1];
}

long GZPattern::row_sum(int r) const {
    const GZRow &rw = row(r);
    return std::accumulate(rw.neg.begin(), rw.neg.end(), 0L) +
           std::accumulate(rw.pos.begin(), rw.pos.end(), 0L);
}

GZPattern GZPattern::zero(int n) {
    GZPattern p;
    p.n = n;
    p.rows.resize(2 * n);
    for (int r = 1; r <= 2 * n; ++r) {
        p.row(r).neg.assign((r + 1) / 2, 0);
        p.row(r).pos.assign(r / 2, 0);
    }
    return p;
}

long TopRow::sum() const {
    return std::accumulate(neg.begin(), neg.end(), 0L) +
           std::accumulate(pos.begin(), pos.end(), 0L);
}

bool TopRow::operator<(const TopRow &o) const {
    if (n != o.n)
        return n < o.n;
    if (neg != o.neg)
        return neg < o.neg;
    return pos < o.pos;
}

std::string TopRow::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < neg.size(); ++i)
        os << (i ? "," : "") << neg[i];
    os << ";";
    for (std::size_t i = 0; i < pos.size(); ++i)
        os << (i ? "," : "") << pos[i];
    return os.str();
}

namespace {

GzVerdict fail(std::string cond, std::string detail) {
    return {false, std::move(cond), std::move(detail)};
}

GzVerdict check_shape(const GZPattern &p) {
    if (p.n < 1)
        return fail("shape", "rank must be >= 1");
    if (static_cast<int>(p.rows.size()) != 2 * p.n)
        return fail("shape", "expected " + std::to_string(2 * p.n) + " rows");
    for (int r = 1; r <= 2 * p.n; ++r) {
        const GZRow &rw = p.row(r);
        if (static_cast<int>(rw.neg.size()) != (r + 1) / 2 ||
            static_cast<int>(rw.pos.size()) != r / 2)
            return fail("shape", "row " + std::to_string(r) + " has wrong arity");
        for (int v : rw.neg)
            if (v < 0)
                return fail("nonnegative", "row " + std::to_string(r));
        for (int v : rw.pos)
            if (v < 0)
                return fail("nonnegative", "row " + std::to_string(r));
    }
    return {};
}

int positive_count(const std::vector<int> &v) {
    int c = 0;
    for (int x : v)
        if (x > 0)
            ++c;
    return c;
}

std::string at(int i, int r) {
    return "m(" + std::to_string(i) + "," + std::to_string(r) + ")";
}

} // namespace

GzVerdict validate_top(const TopRow &t) {
    if (t.n < 1 || static_cast<int>(t.neg.size()) != t.n ||
        static_cast<int>(t.pos.size()) != t.n)
        return fail("shape", "top row arity");
    for (int v : t.neg)
        if (v < 0)
            return fail("nonnegative", "negative side");
    for (int v : t.pos)
        if (v < 0)
            return fail("nonnegative", "positive side");
    for (std::size_t i = 0; i + 1 < t.neg.size(); ++i)
        if (t.neg[i] < t.neg[i + 1])
            return fail("condition 1", "negative side not weakly decreasing");
    for (std::size_t i = 0; i + 1 < t.pos.size(); ++i)
        if (t.pos[i] < t.pos[i + 1])
            return fail("condition 1", "positive side not weakly decreasing");
    if (t.neg.back() < positive_count(t.pos))
        return fail("condition 1", "m(-1) < number of positive labels > 0");
    return {};
}

GzVerdict validate_finite(const GZPattern &p) {
    GzVerdict shape = check_shape(p);
    if (!shape.ok)
        return shape;
    const int n = p.n;

    // 1. top-row dominance and counting condition
    TopRow top{n, p.row(2 * n).neg, p.row(2 * n).pos};
    GzVerdict vt = validate_top(top);
    if (!vt.ok)
        return vt;

    // 2. theta between even row 2s and odd row 2s-1, negative side
    for (int s = 1; s <= n; ++s)
        for (int i = 1; i <= s; ++i) {
            const int th = p.entry(-i, 2 * s) - p.entry(-i, 2 * s - 1);
            if (th != 0 && th != 1)
                return fail("condition 2", at(-i, 2 * s - 1));
        }
    // 3. theta between even row 2s and odd row 2s+1, positive side
    for (int s = 1; s <= n - 1; ++s)
        for (int i = 1; i <= s; ++i) {
            const int th = p.entry(i, 2 * s) - p.entry(i, 2 * s + 1);
            if (th != 0 && th != 1)
                return fail("condition 3", at(i, 2 * s));
        }
    // 4. counting condition on even rows
    for (int s = 1; s <= n; ++s)
        if (p.entry(-1, 2 * s) < positive_count(p.row(2 * s).pos))
            return fail("condition 4", "row " + std::to_string(2 * s));
    // 5. counting condition on odd rows against the even row below them.
    // The even-to-odd branching step is a horizontal strip on the underlying
    // partitions, whose boundary row forces m(-1,2s+1) to dominate the count
    // of positive labels of row 2s (not merely of row 2s+1, which is the
    // weaker own-row form and is implied).
    for (int s = 1; s <= n - 1; ++s)
        if (p.entry(-1, 2 * s + 1) < positive_count(p.row(2 * s).pos))
            return fail("condition 5", "row " + std::to_string(2 * s + 1));
    for (int s = 2; s <= n; ++s)
        if (p.entry(-1, 2 * s - 1) < positive_count(p.row(2 * s - 1).pos))
            return fail("condition 5", "row " + std::to_string(2 * s - 1));
    // 6. in-betweenness, positive side (odd row between its even neighbours)
    for (int s = 2; s <= n; ++s)
        for (int i = 1; i <= s - 1; ++i) {
            if (p.entry(i, 2 * s) - p.entry(i, 2 * s - 1) < 0)
                return fail("condition 6", at(i, 2 * s - 1));
            if (p.entry(i, 2 * s - 1) - p.entry(i + 1, 2 * s) < 0)
                return fail("condition 6", at(i, 2 * s - 1));
        }
    // 7. in-betweenness, negative side
    for (int s = 1; s <= n - 1; ++s)
        for (int i = 1; i <= s; ++i) {
            if (p.entry(-i - 1, 2 * s + 1) - p.entry(-i, 2 * s) < 0)
                return fail("condition 7", at(-i, 2 * s));
            if (p.entry(-i, 2 * s) - p.entry(-i, 2 * s + 1) < 0)
                return fail("condition 7", at(-i, 2 * s));
        }
    return {};
}

GzVerdict validate_stable_body(const GZPattern &p) {
    GzVerdict shape = check_shape(p);
    if (!shape.ok)
        return shape;
    const int last = 2 * p.n;
    auto has_row = [&](int r) { return r >= 1 && r <= last; };
    // Conditions as listed for the infinite-rank basis, per even index 2r,
    // applied wherever the referenced rows exist in the body.
    for (int r = 1; has_row(2 * r) || has_row(2 * r - 1); ++r) {
        // 1. m(-i,2r) - m(-i,2r-1) in {0,1}
        if (has_row(2 * r))
            for (int i = 1; i <= r; ++i) {
                const int th = p.entry(-i, 2 * r) - p.entry(-i, 2 * r - 1);
                if (th != 0 && th != 1)
                    return fail("prop condition 1", at(-i, 2 * r - 1));
            }
        // 2. m(i,2r) - m(i,2r+1) in {0,1}
        if (has_row(2 * r + 1))
            for (int i = 1; i <= r; ++i) {
                const int th = p.entry(i, 2 * r) - p.entry(i, 2 * r + 1);
                if (th != 0 && th != 1)
                    return fail("prop condition 2", at(i, 2 * r));
            }
        // 3. counting condition on even rows
        if (has_row(2 * r) &&
            p.entry(-1, 2 * r) < positive_count(p.row(2 * r).pos))
            return fail("prop condition 3", "row " + std::to_string(2 * r));
        // 4. counting condition on odd rows, against the even row below
        // (same strengthening as condition 5 of the finite list)
        if (has_row(2 * r + 1)) {
            if (p.entry(-1, 2 * r + 1) < positive_count(p.row(2 * r).pos))
                return fail("prop condition 4", "row " + std::to_string(2 * r + 1));
            if (p.entry(-1, 2 * r + 1) < positive_count(p.row(2 * r + 1).pos))
                return fail("prop condition 4", "row " + std::to_string(2 * r + 1));
        }
        // 5. betweenness, positive side, rows 2r+1 and 2r+2
        if (has_row(2 * r + 2))
            for (int i = 1; i <= r; ++i) {
                if (p.entry(i, 2 * r + 2) - p.entry(i, 2 * r + 1) < 0)
                    return fail("prop condition 5", at(i, 2 * r + 1));
                if (p.entry(i, 2 * r + 1) - p.entry(i + 1, 2 * r + 2) < 0)
                    return fail("prop condition 5", at(i, 2 * r + 1));
            }
        // 6. betweenness, negative side, rows 2r and 2r+1
        if (has_row(2 * r + 1))
            for (int i = 1; i <= r; ++i) {
                if (p.entry(-i - 1, 2 * r + 1) - p.entry(-i, 2 * r) < 0)
                    return fail("prop condition 6", at(-i, 2 * r));
                if (p.entry(-i, 2 * r) - p.entry(-i, 2 * r + 1) < 0)
                    return fail("prop condition 6", at(-i, 2 * r));
            }
        if (2 * r >= last)
            break;
    }
    return {};
}

namespace {

// Candidate values for each entry of row r given row r+1, in the order the
// entries appear (negative side left to right, then positive side). The
// ranges implement the between-row conditions; counting conditions are
// filtered afterwards.
void enumerate_row_below(const GZPattern &partial, int r,
                         const std::function<void(GZRow &&)> &emit) {
    const int nneg = (r + 1) / 2, npos = r / 2;
    GZRow cur;
    cur.neg.resize(nneg);
    cur.pos.resize(npos);

    // Value range for entry slot: negative side first (display order), then
    // positive side.
    auto range_for = [&](int slot, int &lo, int &hi) {
        if (slot < nneg) {
            const int i = nneg - slot; // entry m_{-i, r}
            if (r % 2 == 1) {
                // odd r = 2s-1 below even r+1 = 2s: theta condition
                hi = partial.entry(-i, r + 1);
                lo = std::max(0, hi - 1);
            } else {
                // even r = 2s below odd r+1 = 2s+1: m(-i,2s+1) <= m(-i,2s) <= m(-i-1,2s+1)
                lo = partial.entry(-i, r + 1);
                hi = partial.entry(-i - 1, r + 1);
            }
        } else {
            const int i = slot - nneg + 1; // entry m_{i, r}
            if (r % 2 == 1) {
                // odd r = 2s-1 below even 2s: m(i+1,2s) <= m(i,2s-1) <= m(i,2s)
                lo = partial.entry(i + 1, r + 1);
                hi = partial.entry(i, r + 1);
            } else {
                // even r = 2s below odd 2s+1: m(i,2s) - m(i,2s+1) in {0,1}
                lo = partial.entry(i, r + 1);
                hi = lo + 1;
            }
        }
        lo = std::max(lo, 0);
    };

    std::function<void(int)> rec = [&](int slot) {
        if (slot == nneg + npos) {
            // Counting condition on the completed row.
            if (!cur.neg.empty() && cur.neg.back() < positive_count(cur.pos))
                return;
            // For an even row, the odd row above must dominate the count of
            // its positive labels (condition 5 in its cross-row form).
            if (r % 2 == 0 &&
                partial.entry(-1, r + 1) < positive_count(cur.pos))
                return;
            emit(GZRow(cur));
            return;
        }
        int lo, hi;
        range_for(slot, lo, hi);
        for (int v = lo; v <= hi; ++v) {
            if (slot < nneg)
                cur.neg[slot] = v;
            else
                cur.pos[slot - nneg] = v;
            rec(slot + 1);
        }
    };
    rec(0);
}

} // namespace

std::vector<GZPattern> enumerate_patterns(const TopRow &top) {
    GzVerdict vt = validate_top(top);
    if (!vt.ok)
        throw std::invalid_argument("enumerate_patterns: invalid top row (" + vt.condition +
                                    ": " + vt.detail + ")");
    const int n = top.n;
    GZPattern base;
    base.n = n;
    base.rows.resize(2 * n);
    base.row(2 * n) = GZRow{top.neg, top.pos};

    std::vector<GZPattern> out;
    std::function<void(GZPattern &, int)> descend = [&](GZPattern &pat, int r) {
        if (r == 0) {
            out.push_back(pat);
            return;
        }
        enumerate_row_below(pat, r, [&](GZRow &&row) {
            pat.row(r) = std::move(row);
            descend(pat, r - 1);
        });
    };
    descend(base, 2 * n - 1);
    return out;
}

WeightVector vacuum_weight(int n, const Rational &p) {
    WeightVector w;
    const Rational half = p / Rational(2);
    for (int i = 1; i <= n; ++i) {
        w.set(-i, -half);
        w.set(i, half);
    }
    return w;
}

WeightVector pattern_weight(const GZPattern &pat, const Rational &p) {
    WeightVector w = vacuum_weight(pat.n, p);
    long below = 0;
    for (int r = 1; r <= 2 * pat.n; ++r) {
        const long here = pat.row_sum(r);
        const int mode = rho_inverse(r);
        w.set(mode, w.get(mode) + Rational(here - below));
        below = here;
    }
    return w;
}

std::vector<TopRow> tensor_branch(const TopRow &top) {
    GzVerdict vt = validate_top(top);
    if (!vt.ok)
        throw std::invalid_argument("tensor_branch: invalid top row");
    std::vector<TopRow> out;
    for (int k = -top.n; k <= top.n; ++k) {
        if (k == 0)
            continue;
        TopRow cand = top;
        if (k < 0)
            cand.neg[cand.neg.size() + k] += 1;
        else
            cand.pos[k - 1] += 1;
        if (validate_top(cand).ok)
            out.push_back(std::move(cand));
    }
    return out;
}

namespace {

// Negative side of a row as a partition (trailing zeros stripped); nullopt
// when the positive side is not identically zero.
std::optional<std::vector<int>> stable_row_partition(const GZRow &row) {
    for (int v : row.pos)
        if (v != 0)
            return std::nullopt;
    std::vector<int> nu = row.neg;
    while (!nu.empty() && nu.back() == 0)
        nu.pop_back();
    return nu;
}

} // namespace

std::optional<int> stability_index(const GZPattern &p) {
    auto nu = stable_row_partition(p.row(2 * p.n));
    if (!nu)
        return std::nullopt;
    int s = 2 * p.n;
    for (int r = 2 * p.n - 1; r >= 1; --r) {
        auto part = stable_row_partition(p.row(r));
        if (!part || *part != *nu)
            break;
        s = r;
    }
    return s;
}

GZPattern phi_extend(const GZPattern &p) {
    auto nu = stable_row_partition(p.row(2 * p.n));
    if (!nu)
        throw std::invalid_argument(
            "phi_extend: top row must have zero positive part");
    GZPattern out = p;
    out.n = p.n + 1;
    for (int r = 2 * p.n + 1; r <= 2 * p.n + 2; ++r) {
        GZRow row;
        row.neg = *nu;
        row.neg.resize((r + 1) / 2, 0);
        row.pos.assign(r / 2, 0);
        out.rows.push_back(std::move(row));
    }
    return out;
}

InfiniteGZPattern InfiniteGZPattern::normalized() const {
    auto s0 = stability_index(body);
    InfiniteGZPattern out;
    out.nu = nu;
    const int keep = s0 ? std::max(1, (*s0 + 1) / 2) : body.n;
    out.body.n = keep;
    out.body.rows.assign(body.rows.begin(), body.rows.begin() + 2 * keep);
    return out;
}

bool InfiniteGZPattern::operator==(const InfiniteGZPattern &o) const {
    InfiniteGZPattern a = normalized(), b = o.normalized();
    return a.nu == b.nu && a.body == b.body;
}

InfiniteGZPattern phi_to_infinite(const GZPattern &p) {
    auto nu = stable_row_partition(p.row(2 * p.n));
    if (!nu)
        throw std::invalid_argument(
            "phi_to_infinite: top row must have zero positive part");
    InfiniteGZPattern out;
    out.nu = *nu;
    out.body = p;
    return out;
}

GZPattern phi_from_infinite(const InfiniteGZPattern &p, int two_s) {
    if (two_s % 2 != 0 || two_s < 2)
        throw std::invalid_argument("phi_from_infinite: row index must be even and >= 2");
    InfiniteGZPattern norm = p.normalized();
    if (two_s < 2 * norm.body.n)
        throw std::invalid_argument(
            "phi_from_infinite: pattern is not stable with respect to row " +
            std::to_string(two_s));
    GZPattern out = norm.body;
    out.n = two_s / 2;
    for (int r = 2 * norm.body.n + 1; r <= two_s; ++r) {
        GZRow row;
        row.neg = norm.nu;
        row.neg.resize((r + 1) / 2, 0);
        row.pos.assign(r / 2, 0);
        out.rows.push_back(std::move(row));
    }
    return out;
}

GzVerdict validate_infinite(const InfiniteGZPattern &p, long order_p) {
    for (std::size_t i = 0; i + 1 < p.nu.size(); ++i)
        if (p.nu[i] < p.nu[i + 1])
            return fail("nu", "not a partition");
    if (!p.nu.empty() && p.nu.back() <= 0)
        return fail("nu", "trailing non-positive part");
    GzVerdict body = validate_stable_body(p.body);
    if (!body.ok)
        return body;
    auto top = stable_row_partition(p.body.row(2 * p.body.n));
    if (!top || *top != p.nu)
        return fail("stability", "row 2s differs from [nu;0]");
    if (!p.nu.empty() && p.nu.front() > order_p)
        return fail("cutoff", "nu_1 > p");
    return {};
}

std::vector<TopRow> enumerate_tops(int n, long p, int level, Cutoff cutoff) {
    std::vector<TopRow> out;
    TopRow cur;
    cur.n = n;
    cur.neg.assign(n, 0);
    cur.pos.assign(n, 0);
    const long bound = cutoff == Cutoff::apply ? p : level;
    // Negative side weakly decreasing bounded by the cutoff, then positive
    // side weakly decreasing; counting condition checked at the end.
    std::function<void(int, long)> fill_pos = [&](int slot, long left) {
        if (slot == n) {
            if (left == 0 && validate_top(cur).ok)
                out.push_back(cur);
            return;
        }
        const long cap = slot == 0 ? left : std::min<long>(left, cur.pos[slot - 1]);
        for (long v = 0; v <= cap; ++v) {
            cur.pos[slot] = static_cast<int>(v);
            fill_pos(slot + 1, left - v);
        }
        cur.pos[slot] = 0;
    };
    std::function<void(int, long)> fill_neg = [&](int slot, long left) {
        if (slot == n) {
            fill_pos(0, left);
            return;
        }
        const long cap = slot == 0 ? std::min<long>(left, bound)
                                   : std::min<long>(left, cur.neg[slot - 1]);
        for (long v = 0; v <= cap; ++v) {
            cur.neg[slot] = static_cast<int>(v);
            fill_neg(slot + 1, left - v);
        }
        cur.neg[slot] = 0;
    };
    fill_neg(0, level);
    return out;
}

std::map<WeightVector, long> count_basis(int n, long p, int level, Cutoff cutoff) {
    std::map<WeightVector, long> out;
    for (const TopRow &top : enumerate_tops(n, p, level, cutoff))
        for (const GZPattern &pat : enumerate_patterns(top))
            out[pattern_weight(pat, Rational(p))] += 1;
    return out;
}

} // namespace parastat
