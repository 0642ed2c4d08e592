#include "parastat/algebra_element.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace parastat {

void WeightVector::set(int index, Rational value) {
    if (index == 0)
        throw std::invalid_argument("WeightVector: index 0 is not a mode");
    if (value.is_zero())
        entries_.erase(index);
    else
        entries_[index] = std::move(value);
}

Rational WeightVector::get(int index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? Rational(0) : it->second;
}

WeightVector WeightVector::operator+(const WeightVector &o) const {
    WeightVector out = *this;
    for (const auto &[i, v] : o.entries_)
        out.set(i, out.get(i) + v);
    return out;
}

std::string WeightVector::str(int n) const {
    std::ostringstream os;
    for (int i = -n; i <= -1; ++i)
        os << (i == -n ? "" : ",") << get(i).str();
    os << ";";
    for (int i = 1; i <= n; ++i)
        os << (i == 1 ? "" : ",") << get(i).str();
    return os.str();
}

AlgebraElement AlgebraElement::unit(int row, int col, QSqrt2 value) {
    AlgebraElement e;
    e.set_entry(row, col, std::move(value));
    return e;
}

QSqrt2 AlgebraElement::entry(int row, int col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? QSqrt2() : it->second;
}

void AlgebraElement::set_entry(int row, int col, QSqrt2 value) {
    if (value.is_zero())
        entries_.erase({row, col});
    else
        entries_[{row, col}] = std::move(value);
}

void AlgebraElement::add_entry(int row, int col, const QSqrt2 &value) {
    set_entry(row, col, entry(row, col) + value);
}

int AlgebraElement::min_rank() const {
    int m = 2; // empty support still lives at rank 1
    for (const auto &[pos, v] : entries_) {
        m = std::max(m, std::abs(pos.first));
        m = std::max(m, std::abs(pos.second));
    }
    return (m + 1) / 2;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement &o) const {
    AlgebraElement out = *this;
    for (const auto &[pos, v] : o.entries_)
        out.add_entry(pos.first, pos.second, v);
    if (grade_ && o.grade_ && *grade_ == *o.grade_)
        out.grade_ = grade_;
    else
        out.grade_.reset();
    return out;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(QSqrt2(-1)); }

AlgebraElement AlgebraElement::operator-(const AlgebraElement &o) const {
    return *this + (-o);
}

AlgebraElement AlgebraElement::scaled(const QSqrt2 &c) const {
    AlgebraElement out;
    out.grade_ = grade_;
    if (c.is_zero())
        return out;
    for (const auto &[pos, v] : entries_)
        out.entries_[pos] = v * c;
    return out;
}

AlgebraElement AlgebraElement::times(const AlgebraElement &o) const {
    // Sparse product: index o's entries by row once.
    std::map<int, std::vector<std::pair<int, QSqrt2>>> by_row;
    for (const auto &[pos, v] : o.entries_)
        by_row[pos.first].push_back({pos.second, v});
    AlgebraElement out;
    for (const auto &[pos, v] : entries_) {
        auto it = by_row.find(pos.second);
        if (it == by_row.end())
            continue;
        for (const auto &[col, w] : it->second)
            out.add_entry(pos.first, col, v * w);
    }
    if (grade_ && o.grade_)
        out.grade_ = *grade_ + *o.grade_;
    return out;
}

Grade position_grade(int row, int col) {
    if (row == 0 && col == 0)
        throw std::invalid_argument("position_grade: (0,0) is excluded");
    auto sector = [](int idx) { return idx < 0 ? -1 : (idx > 0 ? 1 : 0); };
    const int r = sector(row), c = sector(col);
    if (r == 0 || c == 0) {
        const int other = r == 0 ? c : r;
        return other < 0 ? Grade(1, 1) : Grade(1, 0);
    }
    return r == c ? Grade(0, 0) : Grade(0, 1);
}

bool is_homogeneous_of(const AlgebraElement &x, Grade g) {
    for (const auto &[pos, v] : x.entries()) {
        if (pos.first == 0 && pos.second == 0)
            return false;
        if (position_grade(pos.first, pos.second) != g)
            return false;
    }
    return true;
}

std::optional<Grade> infer_grade(const AlgebraElement &x) {
    if (x.is_zero())
        return Grade(0, 0);
    auto first = x.entries().begin()->first;
    if (first.first == 0 && first.second == 0)
        return std::nullopt;
    Grade g = position_grade(first.first, first.second);
    return is_homogeneous_of(x, g) ? std::optional<Grade>(g) : std::nullopt;
}

namespace {

// Rows of the 2x2 block with index b, in ascending matrix-index order.
std::array<int, 2> block_rows(int b) {
    if (b > 0)
        return {2 * b - 1, 2 * b};
    return {2 * b, 2 * b + 1};
}

using Block2 = std::array<std::array<QSqrt2, 2>, 2>;

Block2 get_block(const AlgebraElement &y, int bi, int bj) {
    Block2 m;
    auto ri = block_rows(bi), rj = block_rows(bj);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            m[a][b] = y.entry(ri[a], rj[b]);
    return m;
}

// I = [[0,1],[1,0]], J = [[0,1],[-1,0]] acting on 2x2 blocks.
Block2 left_I(const Block2 &m) { return {m[1], m[0]}; }
Block2 left_J(const Block2 &m) {
    return {m[1], {-m[0][0], -m[0][1]}};
}
Block2 right_I(const Block2 &m) { // M.I swaps columns
    return {{{m[0][1], m[0][0]}, {m[1][1], m[1][0]}}};
}
Block2 right_J(const Block2 &m) { // M.J: col0 = -col1, col1 = col0
    return {{{-m[0][1], m[0][0]}, {-m[1][1], m[1][0]}}};
}
Block2 transpose(const Block2 &m) {
    return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
}
Block2 add(const Block2 &x, const Block2 &y) {
    Block2 out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out[a][b] = x[a][b] + y[a][b];
    return out;
}
bool is_zero(const Block2 &m) {
    for (const auto &row : m)
        for (const auto &v : row)
            if (!v.is_zero())
                return false;
    return true;
}

} // namespace

ConstraintVerdict block_constraints_check(const AlgebraElement &y) {
    ConstraintVerdict out;
    if (!y.entry(0, 0).is_zero())
        return {false, "(0,0) entry nonzero", 0, 0};

    // Block indices touched by the support.
    int n = y.min_rank();
    auto fail = [&](const char *cond, int i, int j) {
        return ConstraintVerdict{false, cond, i, j};
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            // I Y(-i,-j) + Y(-j,-i)^T I = 0
            Block2 m = add(left_I(get_block(y, -i, -j)),
                           right_I(transpose(get_block(y, -j, -i))));
            if (!is_zero(m))
                return fail("I-type (neg,neg)", -i, -j);
            // J Y(i,j) + Y(j,i)^T J = 0
            m = add(left_J(get_block(y, i, j)),
                    right_J(transpose(get_block(y, j, i))));
            if (!is_zero(m))
                return fail("J-type (pos,pos)", i, j);
            // I Y(-i,j) + Y(j,-i)^T J = 0
            m = add(left_I(get_block(y, -i, j)),
                    right_J(transpose(get_block(y, j, -i))));
            if (!is_zero(m))
                return fail("IJ-type (neg,pos)", -i, j);
        }
        // Y(0,-j) + Y(-j,0)^T I = 0: Y(0,-j) is 1x2, Y(-j,0) is 2x1.
        {
            auto rows = block_rows(-i);
            QSqrt2 c0 = y.entry(0, rows[0]) + y.entry(rows[1], 0);
            QSqrt2 c1 = y.entry(0, rows[1]) + y.entry(rows[0], 0);
            if (!c0.is_zero() || !c1.is_zero())
                return fail("row-0 (neg)", 0, -i);
        }
        // Y(0,j) - Y(j,0)^T J = 0: (v^T J) = (-v2, v1).
        {
            auto rows = block_rows(i);
            QSqrt2 c0 = y.entry(0, rows[0]) + y.entry(rows[1], 0);
            QSqrt2 c1 = y.entry(0, rows[1]) - y.entry(rows[0], 0);
            if (!c0.is_zero() || !c1.is_zero())
                return fail("row-0 (pos)", 0, i);
        }
    }
    return out;
}

AlgebraElement graded_bracket(const AlgebraElement &x, const AlgebraElement &y) {
    if (!x.grade() || !y.grade())
        throw std::invalid_argument(
            "graded_bracket: operands must be homogeneous (grade present)");
    const Grade a = *x.grade(), b = *y.grade();
    AlgebraElement xy = x.times(y);
    AlgebraElement yx = y.times(x);
    AlgebraElement out =
        a.bracket_sign(b) > 0 ? xy - yx : xy + yx;
    out.set_grade(a + b);
    return out;
}

AlgebraElement mat_commutator(const AlgebraElement &x, const AlgebraElement &y) {
    return x.times(y) - y.times(x);
}

AlgebraElement mat_anticommutator(const AlgebraElement &x, const AlgebraElement &y) {
    return x.times(y) + y.times(x);
}

Grade mode_grade(int i) {
    if (i == 0)
        throw std::invalid_argument("mode_grade: mode 0 is not allowed");
    return i < 0 ? Grade(1, 1) : Grade(1, 0);
}

AlgebraElement generator(int i, Sign sign) {
    if (i == 0)
        throw std::invalid_argument("generator: mode 0 is not allowed");
    AlgebraElement g(mode_grade(i));
    const QSqrt2 s2 = QSqrt2::sqrt2();
    if (i < 0) {
        if (sign == Sign::plus) {
            g.set_entry(2 * i, 0, s2);
            g.set_entry(0, 2 * i + 1, -s2);
        } else {
            g.set_entry(0, 2 * i, s2);
            g.set_entry(2 * i + 1, 0, -s2);
        }
    } else {
        if (sign == Sign::plus) {
            g.set_entry(0, 2 * i, s2);
            g.set_entry(2 * i - 1, 0, s2);
        } else {
            g.set_entry(0, 2 * i - 1, s2);
            g.set_entry(2 * i, 0, -s2);
        }
    }
    return g;
}

AlgebraElement cartan_h(int i) {
    if (i == 0)
        throw std::invalid_argument("cartan_h: index 0 is not allowed");
    return graded_bracket(generator(i, Sign::plus), generator(i, Sign::minus))
        .scaled(QSqrt2(Rational(1, 2), Rational(0)));
}

AlgebraElement gl_E(int j, int k) {
    if (j == 0 || k == 0)
        throw std::invalid_argument("gl_E: zero index");
    return graded_bracket(generator(j, Sign::plus), generator(k, Sign::minus))
        .scaled(QSqrt2(Rational(1, 2), Rational(0)));
}

WeightVector adjoint_weight(const AlgebraElement &x) {
    return adjoint_weight(x, x.min_rank());
}

WeightVector adjoint_weight(const AlgebraElement &x, int n) {
    if (x.is_zero())
        throw std::invalid_argument("adjoint_weight: zero element");
    WeightVector w;
    for (int i = -n; i <= n; ++i) {
        if (i == 0)
            continue;
        AlgebraElement bracket = graded_bracket(cartan_h(i), x);
        // bracket must equal lambda * x for a scalar lambda.
        const auto &ref = *x.entries().begin();
        QSqrt2 lambda = bracket.entry(ref.first.first, ref.first.second) / ref.second;
        if (bracket != x.scaled(lambda))
            throw std::invalid_argument(
                "adjoint_weight: not an eigenvector of ad h_" + std::to_string(i));
        w.set(i, lambda.rational_part_checked());
    }
    return w;
}

} // namespace parastat
