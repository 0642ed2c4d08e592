#pragma once

#include "parastat/grade.hpp"
#include "parastat/qsqrt2.hpp"
#include "parastat/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parastat {

// Finitely-supported map from nonzero mode index i to the coefficient of
// eps_i. Unstored indices are zero. Half-integers show up as weights of the
// order-p vacuum, so values are Rational.
class WeightVector {
  public:
    void set(int index, Rational value);
    Rational get(int index) const;
    const std::map<int, Rational> &entries() const { return entries_; }

    WeightVector operator+(const WeightVector &o) const;
    bool operator==(const WeightVector &o) const { return entries_ == o.entries_; }
    bool operator!=(const WeightVector &o) const { return !(*this == o); }
    bool operator<(const WeightVector &o) const { return entries_ < o.entries_; }

    // "a,b;c,d" over indices -n..-1;1..n.
    std::string str(int n) const;

  private:
    std::map<int, Rational> entries_; // zero values never stored
};

// Sparse square matrix over Q(sqrt2) with integer row/column indices running
// over [-2n, 2n] for some finite n, plus an optional Z2xZ2 grade (present iff
// the element is homogeneous). Rows and columns are the matrix realization's
// own index set; the block with index b>0 occupies rows {2b-1, 2b}, block b<0
// occupies {2b, 2b+1}, block 0 is the single row/column 0.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(Grade g) : grade_(g) {}

    static AlgebraElement unit(int row, int col, QSqrt2 value); // value * e_{row,col}

    const std::map<std::pair<int, int>, QSqrt2> &entries() const { return entries_; }
    QSqrt2 entry(int row, int col) const;
    void set_entry(int row, int col, QSqrt2 value); // erases on zero
    void add_entry(int row, int col, const QSqrt2 &value);

    bool is_zero() const { return entries_.empty(); }

    const std::optional<Grade> &grade() const { return grade_; }
    void set_grade(Grade g) { grade_ = g; }

    // Minimal n with support inside [-2n, 2n]; 1 for the zero element.
    int min_rank() const;

    AlgebraElement operator+(const AlgebraElement &o) const;
    AlgebraElement operator-(const AlgebraElement &o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const QSqrt2 &c) const;
    bool operator==(const AlgebraElement &o) const { return entries_ == o.entries_; }
    bool operator!=(const AlgebraElement &o) const { return !(*this == o); }

    // Plain matrix product (not a bracket); drops the grade unless both
    // operands are homogeneous, in which case grades add.
    AlgebraElement times(const AlgebraElement &o) const;

  private:
    std::map<std::pair<int, int>, QSqrt2> entries_;
    std::optional<Grade> grade_;
};

// Z2xZ2 grade of a matrix position per the block grading of the realization:
// (neg,neg)/(pos,pos) -> (0,0); (neg,0)/(0,neg) -> (1,1);
// (pos,0)/(0,pos) -> (1,0); (neg,pos)/(pos,neg) -> (0,1).
// Position (0,0) is not part of the algebra and is rejected.
Grade position_grade(int row, int col);

// True when every nonzero entry sits at a position of grade g.
bool is_homogeneous_of(const AlgebraElement &x, Grade g);

// Grade inferred from the support when homogeneous, nullopt otherwise.
// The zero element is reported as grade (0,0).
std::optional<Grade> infer_grade(const AlgebraElement &x);

struct ConstraintVerdict {
    bool ok = true;
    // First violated condition when !ok.
    std::string condition;
    int block_i = 0, block_j = 0;
};

// Checks the defining block conditions of the matrix algebra on the support
// of Y: I Y(-i,-j) + Y(-j,-i)^T I = 0, J Y(i,j) + Y(j,i)^T J = 0,
// I Y(-i,j) + Y(j,-i)^T J = 0, the two row/column-0 conditions, and entry
// (0,0) = 0.
ConstraintVerdict block_constraints_check(const AlgebraElement &y);

// x.y - (-1)^(a.b) y.x for homogeneous x, y; result carries grade a+b.
// Throws if either operand has no grade.
AlgebraElement graded_bracket(const AlgebraElement &x, const AlgebraElement &y);

// Plain matrix commutator / anticommutator, used where a relation is to be
// evaluated with its literal bracket types rather than the graded bracket.
AlgebraElement mat_commutator(const AlgebraElement &x, const AlgebraElement &y);
AlgebraElement mat_anticommutator(const AlgebraElement &x, const AlgebraElement &y);

enum class Sign { plus, minus };
inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
inline Sign sign_flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// Grade of the creation/annihilation operator family for mode i:
// (1,1) for parafermions (i<0), (1,0) for parabosons (i>0).
Grade mode_grade(int i);

// The generator c_i^sign: for i<0 the parafermion combination
// sqrt2(e_{2i,0} - e_{0,2i+1}) / sqrt2(e_{0,2i} - e_{2i+1,0}), for i>0 the
// paraboson combination sqrt2(e_{0,2i} + e_{2i-1,0}) / sqrt2(e_{0,2i-1} - e_{2i,0}).
AlgebraElement generator(int i, Sign sign);

// h_i = 1/2 [[c_i^+, c_i^-]]; diagonal.
AlgebraElement cartan_h(int i);

// E_{jk} = 1/2 [[c_j^+, c_k^-]]; the gl(n|n) basis inside the algebra.
AlgebraElement gl_E(int j, int k);

// Weight of x under ad h_i for i in [-n,n]*, n = minimal covering rank.
// Throws (reporting the offending i) when x is not a joint eigenvector.
WeightVector adjoint_weight(const AlgebraElement &x);
WeightVector adjoint_weight(const AlgebraElement &x, int n);

} // namespace parastat
