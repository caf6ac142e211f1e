#include "equiloc/matrix.hpp"

#include <utility>

namespace equiloc {

RationalMatrix RationalMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
    RationalMatrix m;
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
}

void RationalMatrix::append_row(std::vector<Rational> row) {
    if (rows_ == 0) {
        cols_ = row.size();
    } else if (row.size() != cols_) {
        throw structural_error("appended row has wrong length");
    }
    data_.push_back(std::move(row));
    ++rows_;
}

std::size_t rational_rank(const RationalMatrix& m) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;

    // Scale each row to integers so the elimination below is division-free
    // except for the exact Bareiss quotients.
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            scale = lcm(scale, denominator(m.at(r, c)));
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& v = m.at(r, c);
            a[r][c] = numerator(v) * (scale / denominator(v));
        }
    }

    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            for (std::size_t c = col + 1; c < m.cols(); ++c) {
                // Bareiss update: every division here is exact.
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

RationalMatrix reduced_row_echelon(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(m.row(r));

    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < a.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[lead]);
        const Rational inv = a[lead][col];
        for (std::size_t c = col; c < m.cols(); ++c) a[lead][c] /= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == lead || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t c = col; c < m.cols(); ++c) {
                a[r][c] -= factor * a[lead][c];
            }
        }
        ++lead;
    }

    RationalMatrix out;
    for (std::size_t r = 0; r < lead; ++r) out.append_row(std::move(a[r]));
    return out;
}

RationalMatrix rational_nullspace(const RationalMatrix& m) {
    const RationalMatrix rref = reduced_row_echelon(m);

    std::vector<std::size_t> pivot_col_of_row(rref.rows());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t r = 0; r < rref.rows(); ++r) {
        std::size_t c = 0;
        while (c < m.cols() && rref.at(r, c) == 0) ++c;
        pivot_col_of_row[r] = c;
        is_pivot[c] = true;
    }

    RationalMatrix basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < rref.rows(); ++r) {
            v[pivot_col_of_row[r]] = -rref.at(r, free);
        }
        basis.append_row(std::move(v));
    }
    if (basis.rows() == 0) {
        // Preserve the column count so callers can still read dimensions.
        basis = RationalMatrix(0, m.cols());
    }
    return basis;
}

namespace {

RationalMatrix stack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() > 0 && b.rows() > 0 && a.cols() != b.cols()) {
        throw structural_error("row-space comparison of different widths");
    }
    RationalMatrix out;
    for (std::size_t r = 0; r < a.rows(); ++r) out.append_row(a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
    return out;
}

} // namespace

bool row_spaces_equal(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t ra = rational_rank(a);
    const std::size_t rb = rational_rank(b);
    if (ra != rb) return false;
    return rational_rank(stack(a, b)) == ra;
}

bool row_space_contains(const RationalMatrix& b, const RationalMatrix& a) {
    const std::size_t rb = rational_rank(b);
    return rational_rank(stack(a, b)) == rb;
}

} // namespace equiloc
