#include "parastat/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace parastat {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

bool ExactMatrix::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r))
                return false;
    return true;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix &o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("ExactMatrix: dimension mismatch in product");
    ExactMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero())
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                p.at(r, c) += at(r, k) * o.at(k, c);
        }
    return p;
}

bool ExactMatrix::operator==(const ExactMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != o.at(r, c))
                return false;
    return true;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<std::size_t> &rows,
                                   const std::vector<std::size_t> &cols) const {
    ExactMatrix s(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            s.at(r, c) = at(rows[r], cols[c]);
    return s;
}

namespace {

// Row-scale to integers (LCM of denominators per row); preserves rank and
// null space. Returns rows as mpz vectors.
std::vector<std::vector<mpz_class>> integer_rows(const ExactMatrix &m) {
    std::vector<std::vector<mpz_class>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).denominator().get_mpz_t());
        rows[r].resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational &x = m.at(r, c);
            rows[r][c] = x.numerator() * (l / x.denominator());
        }
    }
    return rows;
}

struct Echelon {
    std::vector<std::vector<mpz_class>> rows; // fraction-free row echelon
    std::vector<std::size_t> pivot_cols;      // one per used row, ascending
};

// Fraction-free Bareiss elimination. Pivot rule: columns left to right, first
// remaining row with a nonzero entry.
Echelon bareiss(const ExactMatrix &m) {
    Echelon e;
    e.rows = integer_rows(m);
    const std::size_t nr = m.rows(), nc = m.cols();
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t pr = row;
        while (pr < nr && e.rows[pr][col] == 0)
            ++pr;
        if (pr == nr)
            continue;
        std::swap(e.rows[row], e.rows[pr]);
        const mpz_class pivot = e.rows[row][col];
        for (std::size_t i = row + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                mpz_class t = e.rows[i][j] * pivot - e.rows[i][col] * e.rows[row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e.rows[i][j] = t;
            }
            e.rows[i][col] = 0;
        }
        prev = pivot;
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

} // namespace

std::size_t exact_rank(const ExactMatrix &m) {
    return bareiss(m).pivot_cols.size();
}

std::vector<std::vector<Rational>> exact_kernel(const ExactMatrix &m) {
    Echelon e = bareiss(m);
    const std::size_t nc = m.cols();
    const std::size_t rank = e.pivot_cols.size();

    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : e.pivot_cols)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(nc);
        v[f] = Rational(1);
        // Back substitution against the echelon rows.
        for (std::size_t ri = rank; ri-- > 0;) {
            const std::size_t pc = e.pivot_cols[ri];
            if (pc > f)
                continue;
            Rational s(0);
            for (std::size_t c = pc + 1; c < nc; ++c) {
                if (e.rows[ri][c] == 0 || v[c].is_zero())
                    continue;
                s += Rational(mpq_class(e.rows[ri][c])) * v[c];
            }
            v[pc] = -s / Rational(mpq_class(e.rows[ri][pc]));
        }
        // Primitive integer form, positive leading entry.
        mpz_class l = 1;
        for (const Rational &x : v)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
        mpz_class g = 0;
        std::vector<mpz_class> ints(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            ints[c] = v[c].numerator() * (l / v[c].denominator());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[c].get_mpz_t());
        }
        int lead = 0;
        for (std::size_t c = 0; c < nc; ++c)
            if (ints[c] != 0) {
                lead = sgn(ints[c]);
                break;
            }
        if (lead < 0)
            g = -g;
        for (std::size_t c = 0; c < nc; ++c)
            v[c] = Rational(mpq_class(ints[c] / g));
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational exact_det(const ExactMatrix &m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("exact_det: square matrix required");
    if (m.rows() == 0)
        return Rational(1);
    // Track the row scaling so the determinant of the original comes back.
    Rational scale(1);
    std::vector<std::vector<mpz_class>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).denominator().get_mpz_t());
        scale = scale * Rational(mpq_class(l));
        rows[r].resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m.at(r, c).numerator() * (l / m.at(r, c).denominator());
    }
    const std::size_t n = m.rows();
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k;
        while (pr < n && rows[pr][k] == 0)
            ++pr;
        if (pr == n)
            return Rational(0);
        if (pr != k) {
            std::swap(rows[pr], rows[k]);
            sign = -sign;
        }
        const mpz_class pivot = rows[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = rows[i][j] * pivot - rows[i][k] * rows[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                rows[i][j] = t;
            }
            rows[i][k] = 0;
        }
        prev = pivot;
    }
    Rational det = Rational(mpq_class(rows[n - 1][n - 1]));
    if (sign < 0)
        det = -det;
    return det / scale;
}

PsdVerdict psd_certificate(const ExactMatrix &m) {
    if (!m.is_symmetric())
        throw std::invalid_argument("psd_certificate: symmetric matrix required");
    const std::size_t n = m.rows();
    PsdVerdict out;

    // Working copy with coordinate tracking: col[j] expresses the current
    // j-th coordinate direction in the original basis, so a witness found in
    // reduced coordinates lifts back exactly.
    ExactMatrix a = m;
    std::vector<std::vector<Rational>> coord(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        coord[i][i] = Rational(1);
    std::vector<bool> active(n, true);

    auto finish_witness = [&](std::vector<Rational> v_reduced) {
        std::vector<Rational> w(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (v_reduced[j].is_zero())
                continue;
            for (std::size_t i = 0; i < n; ++i)
                w[i] += v_reduced[j] * coord[j][i];
        }
        Rational val(0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                val += w[r] * m.at(r, c) * w[c];
        out.positive_semidefinite = false;
        out.witness = std::move(w);
        out.witness_value = val;
    };

    for (;;) {
        // Any negative diagonal entry is an immediate witness.
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && a.at(i, i).sign() < 0) {
                std::vector<Rational> v(n);
                v[i] = Rational(1);
                finish_witness(std::move(v));
                return out;
            }
        // First positive diagonal in index order becomes the pivot.
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && a.at(i, i).sign() > 0) {
                p = i;
                break;
            }
        if (p == n) {
            // All remaining diagonals are zero: PSD iff the remaining block
            // vanishes; otherwise a 2x2 zero-diagonal block is indefinite.
            for (std::size_t r = 0; r < n; ++r) {
                if (!active[r])
                    continue;
                for (std::size_t c = r + 1; c < n; ++c) {
                    if (!active[c] || a.at(r, c).is_zero())
                        continue;
                    std::vector<Rational> v(n);
                    v[r] = Rational(1);
                    v[c] = a.at(r, c).sign() > 0 ? Rational(-1) : Rational(1);
                    finish_witness(std::move(v));
                    return out;
                }
            }
            out.positive_semidefinite = true;
            return out;
        }
        // Schur complement step on the active set.
        const Rational d = a.at(p, p);
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = a.at(p, j);
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == p || row[i].is_zero())
                continue;
            const Rational f = row[i] / d;
            for (std::size_t j = 0; j < n; ++j)
                if (active[j] && j != p)
                    a.at(i, j) -= f * row[j];
            for (std::size_t k = 0; k < n; ++k)
                coord[i][k] -= f * coord[p][k];
        }
        active[p] = false;
    }
}

ExactMatrix solve_linear(const ExactMatrix &a, const ExactMatrix &b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw std::invalid_argument("solve_linear: dimension mismatch");
    const std::size_t n = a.rows(), m = b.cols();
    ExactMatrix w = a, x = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && w.at(pr, col).is_zero())
            ++pr;
        if (pr == n)
            throw std::invalid_argument("solve_linear: singular matrix");
        if (pr != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w.at(pr, j), w.at(col, j));
            for (std::size_t j = 0; j < m; ++j)
                std::swap(x.at(pr, j), x.at(col, j));
        }
        const Rational piv = w.at(col, col);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero())
                continue;
            const Rational f = w.at(i, col) / piv;
            for (std::size_t j = col; j < n; ++j)
                w.at(i, j) -= f * w.at(col, j);
            for (std::size_t j = 0; j < m; ++j)
                x.at(i, j) -= f * x.at(col, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Rational piv = w.at(i, i);
        for (std::size_t j = 0; j < m; ++j)
            x.at(i, j) /= piv;
    }
    return x;
}

} // namespace parastat
