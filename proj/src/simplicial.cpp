#include <whitneyforms/simplicial.hpp>
#include <whitneyforms/errors.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace whitneyforms {

Face::Face(int n, std::vector<int> vertices, int sign) : m_n(n), m_vertices(std::move(vertices)), m_sign(sign) {
    if (n < 0) throw InvalidFace("negative ambient dimension");
    if (sign != 1 && sign != -1) throw InvalidFace("face sign must be +1 or -1");
    if (m_vertices.empty()) throw InvalidFace("face needs at least one vertex");
    if (static_cast<int>(m_vertices.size()) > n + 1)
        throw InvalidFace("face has more than n+1 vertices");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : m_vertices) {
        if (v < 0 || v > n) throw InvalidFace("vertex label " + std::to_string(v) + " outside [0, " + std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(v)]) throw InvalidFace("repeated vertex label " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

bool Face::is_canonical() const {
    return m_sign == 1 && std::is_sorted(m_vertices.begin(), m_vertices.end());
}

int permutation_sign(std::span<const int> labels) {
    int inversions = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] > labels[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Face canonicalize(const Face &face) {
    std::vector<int> sorted = face.vertices();
    std::sort(sorted.begin(), sorted.end());
    return Face(face.ambient_dim(), std::move(sorted), face.sign() * permutation_sign(face.vertices()));
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

std::vector<Face> enumerate_faces(int n, int k) {
    if (k < 0 || k > n) throw BadDegree("face degree " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    std::vector<Face> faces;
    faces.reserve(static_cast<std::size_t>(binomial(n + 1, k + 1)));

    std::vector<int> combo(static_cast<std::size_t>(k) + 1);
    std::iota(combo.begin(), combo.end(), 0);
    for (;;) {
        faces.emplace_back(n, combo);
        int i = k;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j <= k; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j) - 1] + 1;
    }
    return faces;
}

AffineFunction AffineFunction::constant_function(int n, Rational value) {
    AffineFunction f(n);
    f.m_constant = std::move(value);
    return f;
}

AffineFunction AffineFunction::coordinate(int n, int j) {
    if (j < 1 || j > n) throw DimensionMismatch("coordinate index out of range");
    AffineFunction f(n);
    f.m_gradient[static_cast<std::size_t>(j) - 1] = 1;
    return f;
}

bool AffineFunction::is_zero() const { return m_constant.is_zero() && is_constant(); }

bool AffineFunction::is_constant() const {
    return std::all_of(m_gradient.begin(), m_gradient.end(), [](const Rational &a) { return a.is_zero(); });
}

Rational AffineFunction::operator()(std::span<const Rational> point) const {
    if (point.size() != m_gradient.size()) throw DimensionMismatch("point dimension does not match function");
    Rational value = m_constant;
    for (std::size_t i = 0; i < point.size(); ++i)
        if (!m_gradient[i].is_zero()) value += m_gradient[i] * point[i];
    return value;
}

AffineFunction &AffineFunction::operator+=(const AffineFunction &rhs) {
    if (rhs.m_gradient.size() != m_gradient.size()) throw DimensionMismatch("adding affine functions on different spaces");
    m_constant += rhs.m_constant;
    for (std::size_t i = 0; i < m_gradient.size(); ++i) m_gradient[i] += rhs.m_gradient[i];
    return *this;
}

AffineFunction &AffineFunction::operator*=(const Rational &s) {
    m_constant *= s;
    for (auto &a : m_gradient) a *= s;
    return *this;
}

std::vector<AffineFunction> barycentric_functions(int n) {
    if (n < 1) throw DimensionMismatch("barycentric functions need n >= 1");
    std::vector<AffineFunction> nu;
    nu.push_back(AffineFunction(Rational(1), Vector(static_cast<std::size_t>(n), Rational(-1))));
    for (int i = 1; i <= n; ++i) nu.push_back(AffineFunction::coordinate(n, i));
    return nu;
}

Vector vertex_point(int n, int label) {
    Vector p(static_cast<std::size_t>(n));
    if (label > 0) p[static_cast<std::size_t>(label) - 1] = 1;
    return p;
}

Vector AffineMap::operator()(std::span<const Rational> t) const {
    if (static_cast<int>(t.size()) != source_dim()) throw DimensionMismatch("parameter dimension mismatch");
    Vector x = origin;
    for (std::size_t s = 0; s < columns.size(); ++s)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += t[s] * columns[s][j];
    return x;
}

Vector AffineMap::push_forward(std::span<const Rational> dt) const {
    if (static_cast<int>(dt.size()) != source_dim()) throw DimensionMismatch("tangent dimension mismatch");
    Vector v(origin.size());
    for (std::size_t s = 0; s < columns.size(); ++s)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += dt[s] * columns[s][j];
    return v;
}

AffineMap face_parametrization(const Face &face) {
    const int n = face.ambient_dim();
    const auto &verts = face.vertices();
    AffineMap map;
    map.origin = vertex_point(n, verts.front());
    for (std::size_t s = 1; s < verts.size(); ++s) {
        Vector col = vertex_point(n, verts[s]);
        for (std::size_t j = 0; j < col.size(); ++j) col[j] -= map.origin[j];
        map.columns.push_back(std::move(col));
    }
    return map;
}

Cochain::Cochain(int n, int k) : m_n(n), m_k(k) {
    if (k < 0 || k > n) throw BadDegree("cochain degree " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

Cochain Cochain::basis(const Face &face) {
    Cochain c(face.ambient_dim(), face.degree());
    c.add(face, Rational(1));
    return c;
}

void Cochain::add(const Face &face, const Rational &coeff) {
    if (face.ambient_dim() != m_n) throw DimensionMismatch("face and cochain live in different simplices");
    if (face.degree() != m_k) throw DegreeMismatch("face degree does not match cochain degree");
    if (coeff.is_zero()) return;
    const Face canon = canonicalize(face);
    Rational &slot = m_terms[canon.vertices()];
    slot += canon.sign() == 1 ? coeff : -coeff;
    if (slot.is_zero()) m_terms.erase(canon.vertices());
}

Cochain &Cochain::operator+=(const Cochain &rhs) {
    if (rhs.m_n != m_n || rhs.m_k != m_k) throw DegreeMismatch("adding cochains of different shape");
    for (const auto &[verts, coeff] : rhs.m_terms) add(Face(m_n, verts), coeff);
    return *this;
}

Cochain &Cochain::operator*=(const Rational &s) {
    if (s.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[verts, coeff] : m_terms) coeff *= s;
    return *this;
}

Rational cochain_eval(const Cochain &c, const Face &face) {
    if (face.ambient_dim() != c.ambient_dim()) throw DimensionMismatch("face and cochain live in different simplices");
    if (face.degree() != c.degree()) throw DegreeMismatch("face degree does not match cochain degree");
    const Face canon = canonicalize(face);
    auto it = c.terms().find(canon.vertices());
    if (it == c.terms().end()) return Rational(0);
    return canon.sign() == 1 ? it->second : -it->second;
}

} // namespace whitneyforms
