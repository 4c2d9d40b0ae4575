#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <whitneyforms/rational.hpp>

namespace whitneyforms {

using Vector = std::vector<Rational>;

// Dense row-major matrix of Rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_entries(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Rational &operator()(std::size_t r, std::size_t c) { return m_entries[r * m_cols + c]; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return m_entries[r * m_cols + c]; }

    std::span<const Rational> row(std::size_t r) const { return {m_entries.data() + r * m_cols, m_cols}; }

    // Appends a row; the first row appended to an empty 0x0 matrix fixes cols.
    void append_row(std::span<const Rational> values);

    // Rows of `top` followed by rows of `bottom`; column counts must agree.
    static Matrix stack(const Matrix &top, const Matrix &bottom);

    Vector operator*(std::span<const Rational> x) const;

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Rational> m_entries;
};

// Reduced row echelon form together with the pivot column of each nonzero row.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix &m);

// Basis of the exact kernel; one vector per free column, with a 1 in that column.
std::vector<Vector> nullspace(const Matrix &m);

// Exact determinant of a square matrix; 1 for the empty 0x0 matrix.
Rational determinant(const Matrix &m);

// Unique solution of m x = rhs. Throws NoSolution if inconsistent and
// NotUnique if rank(m) < cols(m).
Vector solve(const Matrix &m, std::span<const Rational> rhs);

} // namespace whitneyforms
