#pragma once

#include <map>
#include <span>
#include <vector>

#include <whitneyforms/rational.hpp>
#include <whitneyforms/simplicial.hpp>

namespace whitneyforms {

// Strictly increasing tuple i_1 < ... < i_k of coordinate indices (1-based).
// The empty tuple indexes 0-forms.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::vector<int> indices);
    MultiIndex(std::initializer_list<int> indices) : MultiIndex(std::vector<int>(indices)) {}

    const std::vector<int> &indices() const { return m_indices; }
    int size() const { return static_cast<int>(m_indices.size()); }
    bool contains(int i) const;

    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
    friend auto operator<=>(const MultiIndex &, const MultiIndex &) = default;

private:
    std::vector<int> m_indices;
};

// All k-element multi-indices over {1, ..., n} in lexicographic order.
std::vector<MultiIndex> multi_indices(int n, int k);

// k-form with constant coefficients: sum_I c_I dx^I.
class ConstantForm {
public:
    using Terms = std::map<MultiIndex, Rational>;

    ConstantForm(int n, int k);
    static ConstantForm monomial(int n, const MultiIndex &index, Rational coeff = Rational(1));

    int ambient_dim() const { return m_n; }
    int degree() const { return m_k; }
    const Terms &terms() const { return m_terms; }
    Rational coefficient(const MultiIndex &index) const;

    void add_term(const MultiIndex &index, const Rational &coeff);

    ConstantForm &operator+=(const ConstantForm &rhs);
    ConstantForm &operator*=(const Rational &s);
    friend ConstantForm operator+(ConstantForm a, const ConstantForm &b) { return a += b; }
    friend ConstantForm operator*(const Rational &s, ConstantForm w) { return w *= s; }

    friend bool operator==(const ConstantForm &, const ConstantForm &) = default;

private:
    int m_n;
    int m_k;
    Terms m_terms;
};

// k-form sum_I (b_I + sum_j a_{I,j} x^j) dx^I. Zero coefficients are dropped,
// so two forms are equal iff their term maps are equal.
class AffineForm {
public:
    using Terms = std::map<MultiIndex, AffineFunction>;

    AffineForm(int n, int k);
    static AffineForm zero(int n, int k) { return AffineForm(n, k); }
    // A 0-form given by an affine function.
    static AffineForm function(const AffineFunction &f);

    int ambient_dim() const { return m_n; }
    int degree() const { return m_k; }
    const Terms &terms() const { return m_terms; }
    AffineFunction coefficient(const MultiIndex &index) const;
    bool is_zero() const { return m_terms.empty(); }

    void add_term(const MultiIndex &index, const AffineFunction &coeff);

    AffineForm &operator+=(const AffineForm &rhs);
    AffineForm &operator*=(const Rational &s);
    friend AffineForm operator+(AffineForm a, const AffineForm &b) { return a += b; }
    friend AffineForm operator-(AffineForm a, const AffineForm &b) { return a += Rational(-1) * AffineForm(b); }
    friend AffineForm operator*(const Rational &s, AffineForm w) { return w *= s; }

    friend bool operator==(const AffineForm &, const AffineForm &) = default;

private:
    int m_n;
    int m_k;
    Terms m_terms;
};

ConstantForm wedge(const ConstantForm &a, const ConstantForm &b);

AffineForm scale_by_affine(const AffineFunction &f, const ConstantForm &w);

// Substitutes the face parametrization into the form. The result lives on the
// standard k'-simplex (k' = face degree) in coordinates t^1..t^k'.
AffineForm pullback(const AffineForm &form, const Face &face);

bool is_constant(const AffineForm &form);

// sum_I coeff_I(point) * det(vectors restricted to rows I).
Rational evaluate(const AffineForm &form, std::span<const Rational> point, std::span<const Vector> vectors);

} // namespace whitneyforms
