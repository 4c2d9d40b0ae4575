#include <whitneyforms/linalg.hpp>
#include <whitneyforms/errors.hpp>

#include <algorithm>
#include <string>

namespace whitneyforms {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    for (const auto &r : rows) append_row(std::span<const Rational>(r.begin(), r.size()));
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void Matrix::append_row(std::span<const Rational> values) {
    if (m_rows == 0 && m_cols == 0) m_cols = values.size();
    if (values.size() != m_cols)
        throw DimensionMismatch("row of length " + std::to_string(values.size()) + " appended to matrix with " +
                                std::to_string(m_cols) + " columns");
    m_entries.insert(m_entries.end(), values.begin(), values.end());
    ++m_rows;
}

Matrix Matrix::stack(const Matrix &top, const Matrix &bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw DimensionMismatch("stacking matrices with different column counts");
    Matrix out = top;
    out.m_entries.insert(out.m_entries.end(), bottom.m_entries.begin(), bottom.m_entries.end());
    out.m_rows += bottom.m_rows;
    return out;
}

Vector Matrix::operator*(std::span<const Rational> x) const {
    if (x.size() != m_cols) throw DimensionMismatch("matrix-vector size mismatch");
    Vector y(m_rows);
    for (std::size_t r = 0; r < m_rows; ++r)
        for (std::size_t c = 0; c < m_cols; ++c)
            if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
    return y;
}

// Gauss-Jordan elimination. Arithmetic is exact, so the first nonzero entry
// of each column serves as pivot.
RowEchelon row_reduce(Matrix m) {
    RowEchelon out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m(r, col).is_zero()) ++r;
        if (r == m.rows()) continue;

        if (r != pivot_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(pivot_row, c));

        const Rational inv = Rational(1) / m(pivot_row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(pivot_row, c).is_zero()) m(pivot_row, c) *= inv;

        for (std::size_t other = 0; other < m.rows(); ++other) {
            if (other == pivot_row || m(other, col).is_zero()) continue;
            const Rational factor = m(other, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(pivot_row, c).is_zero()) m(other, c) -= factor * m(pivot_row, c);
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix &m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix &m) {
    const RowEchelon ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const Matrix &m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix a = m;
    Rational det(1);
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t r = col;
        while (r < n && a(r, col).is_zero()) ++r;
        if (r == n) return Rational(0);
        if (r != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(r, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t below = col + 1; below < n; ++below) {
            if (a(below, col).is_zero()) continue;
            const Rational factor = a(below, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(below, c) -= factor * a(col, c);
        }
    }
    return det;
}

Vector solve(const Matrix &m, std::span<const Rational> rhs) {
    if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side length does not match row count");

    Matrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
        augmented(r, m.cols()) = rhs[r];
    }
    const RowEchelon ech = row_reduce(std::move(augmented));

    if (!ech.pivots.empty() && ech.pivots.back() == m.cols())
        throw NoSolution("linear system is inconsistent");
    if (ech.pivots.size() < m.cols())
        throw NotUnique("linear system has rank " + std::to_string(ech.pivots.size()) + " < " +
                        std::to_string(m.cols()) + " unknowns");

    Vector x(m.cols());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, m.cols());
    return x;
}

} // namespace whitneyforms
