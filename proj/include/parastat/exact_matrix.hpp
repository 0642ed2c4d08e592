#pragma once

#include "parastat/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace parastat {

// Dense matrix over Q. Small and exact; everything here is deterministic
// (fixed pivot order) so repeated runs give bit-identical output.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_symmetric() const;
    ExactMatrix transposed() const;
    ExactMatrix operator*(const ExactMatrix &o) const;
    bool operator==(const ExactMatrix &o) const;

    // Submatrix on the given row/column index subsets (in the given order).
    ExactMatrix submatrix(const std::vector<std::size_t> &rows,
                          const std::vector<std::size_t> &cols) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Rank over Q by fraction-free Bareiss elimination on the row-scaled integer
// matrix; pivots are chosen as the first nonzero entry in row-major scan.
std::size_t exact_rank(const ExactMatrix &m);

// Basis of the right null space; each vector is scaled to primitive integer
// form with positive leading entry. Size = cols - rank.
std::vector<std::vector<Rational>> exact_kernel(const ExactMatrix &m);

// Determinant (Bareiss). Square input required.
Rational exact_det(const ExactMatrix &m);

struct PsdVerdict {
    bool positive_semidefinite = false;
    // When not PSD: a witness v with v^T M v < 0, plus that value.
    std::vector<Rational> witness;
    Rational witness_value;
};

// Rational LDL^T with symmetric pivoting on the deterministic index order.
// Throws on non-symmetric input.
PsdVerdict psd_certificate(const ExactMatrix &m);

// Solves A X = B for X, A square invertible. Throws if A is singular.
ExactMatrix solve_linear(const ExactMatrix &a, const ExactMatrix &b);

} // namespace parastat
