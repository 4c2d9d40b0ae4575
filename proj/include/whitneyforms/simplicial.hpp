#pragma once

#include <map>
#include <span>
#include <vector>

#include <whitneyforms/linalg.hpp>
#include <whitneyforms/rational.hpp>

namespace whitneyforms {

// Everything here lives on the standard n-simplex [0, e_1, ..., e_n].
// Vertex label 0 is the origin and label i >= 1 is the unit point e_i.

// Oriented k-face: an ordered tuple of k+1 distinct vertex labels and a sign.
class Face {
public:
    Face(int n, std::vector<int> vertices, int sign = 1);

    int ambient_dim() const { return m_n; }
    int degree() const { return static_cast<int>(m_vertices.size()) - 1; }
    const std::vector<int> &vertices() const { return m_vertices; }
    int sign() const { return m_sign; }

    bool is_canonical() const;

    friend bool operator==(const Face &, const Face &) = default;
    friend auto operator<=>(const Face &, const Face &) = default;

private:
    int m_n;
    std::vector<int> m_vertices;
    int m_sign;
};

// Sign of the permutation sorting `labels` increasingly (labels distinct).
int permutation_sign(std::span<const int> labels);

// Sorted vertices with the sorting permutation's sign folded into the face sign.
Face canonicalize(const Face &face);

// Canonical k-faces of the standard n-simplex in lexicographic order.
std::vector<Face> enumerate_faces(int n, int k);

long long binomial(int n, int k);

// b + sum_i a_i x^i on R^n.
class AffineFunction {
public:
    explicit AffineFunction(int n) : m_constant(0), m_gradient(static_cast<std::size_t>(n)) {}
    AffineFunction(Rational constant, Vector gradient)
        : m_constant(std::move(constant)), m_gradient(std::move(gradient)) {}

    static AffineFunction constant_function(int n, Rational value);
    // The coordinate function x^j, 1 <= j <= n.
    static AffineFunction coordinate(int n, int j);

    int ambient_dim() const { return static_cast<int>(m_gradient.size()); }
    const Rational &constant() const { return m_constant; }
    const Vector &gradient() const { return m_gradient; }

    bool is_zero() const;
    bool is_constant() const;

    Rational operator()(std::span<const Rational> point) const;

    AffineFunction &operator+=(const AffineFunction &rhs);
    AffineFunction &operator*=(const Rational &s);
    friend AffineFunction operator+(AffineFunction a, const AffineFunction &b) { return a += b; }
    friend AffineFunction operator*(const Rational &s, AffineFunction f) { return f *= s; }
    AffineFunction operator-() const { return Rational(-1) * *this; }
    friend AffineFunction operator-(AffineFunction a, const AffineFunction &b) { return a += -b; }

    friend bool operator==(const AffineFunction &, const AffineFunction &) = default;

private:
    Rational m_constant;
    Vector m_gradient;
};

// Barycentric coordinates: nu_0 = 1 - sum x^i, nu_i = x^i.
std::vector<AffineFunction> barycentric_functions(int n);

// Coordinates of vertex `label` as a point of R^n.
Vector vertex_point(int n, int label);

// x = origin + sum_s t^s columns[s], mapping the standard k-simplex onto a face.
struct AffineMap {
    Vector origin;                // n entries
    std::vector<Vector> columns;  // k columns of n entries each

    int source_dim() const { return static_cast<int>(columns.size()); }
    int target_dim() const { return static_cast<int>(origin.size()); }

    Vector operator()(std::span<const Rational> t) const;
    // Image of a tangent vector in t-space.
    Vector push_forward(std::span<const Rational> dt) const;
};

// t -> v_0 + sum_s t^s (v_s - v_0) with v_s the face's vertices in tuple order.
// The face sign does not enter the map; integration applies it.
AffineMap face_parametrization(const Face &face);

// Formal rational combination of canonical k-faces. Zero coefficients are
// never stored, so structural equality is mathematical equality.
class Cochain {
public:
    using Terms = std::map<std::vector<int>, Rational>;

    Cochain(int n, int k);

    static Cochain basis(const Face &face);

    int ambient_dim() const { return m_n; }
    int degree() const { return m_k; }
    const Terms &terms() const { return m_terms; }

    // Adds coeff * face, canonicalizing the face and folding in its sign.
    void add(const Face &face, const Rational &coeff);

    Cochain &operator+=(const Cochain &rhs);
    Cochain &operator*=(const Rational &s);
    friend Cochain operator+(Cochain a, const Cochain &b) { return a += b; }
    friend Cochain operator*(const Rational &s, Cochain c) { return c *= s; }

    friend bool operator==(const Cochain &, const Cochain &) = default;

private:
    int m_n;
    int m_k;
    Terms m_terms;
};

// <c, face>, alternating in the face's vertex order.
Rational cochain_eval(const Cochain &c, const Face &face);

} // namespace whitneyforms
