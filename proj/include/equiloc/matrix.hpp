// Exact linear algebra over the rationals.
//
// Dense matrices of Rational with exact rank (fraction-free elimination on
// an integer-scaled copy), canonical reduced row-echelon form, kernel bases,
// and row-space comparison — the workhorses behind relation independence
// counts and solution-space comparisons.

#pragma once

#include <vector>

#include "equiloc/rational.hpp"

namespace equiloc {

class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, std::vector<Rational>(cols, Rational(0))) {}

    static RationalMatrix from_rows(std::vector<std::vector<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r][c]; }

    const std::vector<Rational>& row(std::size_t r) const { return data_[r]; }

    void append_row(std::vector<Rational> row);

    bool operator==(const RationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Rational>> data_;
};

/// Exact rank via fraction-free (Bareiss) elimination on an integer-scaled
/// copy of the matrix.
std::size_t rational_rank(const RationalMatrix& m);

/// Canonical reduced row-echelon form (exact; pivots are 1, pivot columns
/// cleared). Zero rows are dropped.
RationalMatrix reduced_row_echelon(const RationalMatrix& m);

/// Canonical kernel basis: one vector per free column of the RREF, with a 1
/// at the free column. Returned as rows of a matrix with `m.cols()` columns;
/// the basis is empty iff the kernel is trivial.
RationalMatrix rational_nullspace(const RationalMatrix& m);

/// True iff the row spaces of `a` and `b` coincide (rank-based, exact).
bool row_spaces_equal(const RationalMatrix& a, const RationalMatrix& b);

/// True iff every row of `a` lies in the row space of `b`.
bool row_space_contains(const RationalMatrix& b, const RationalMatrix& a);

} // namespace equiloc
