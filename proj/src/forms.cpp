#include <whitneyforms/forms.hpp>
#include <whitneyforms/errors.hpp>
#include <whitneyforms/linalg.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace whitneyforms {

namespace {

void check_degree(int n, int k) {
    if (n < 0) throw DimensionMismatch("negative ambient dimension");
    if (k < 0 || k > n) throw BadDegree("form degree " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

void check_index(int n, int k, const MultiIndex &index) {
    if (index.size() != k) throw DegreeMismatch("multi-index length does not match form degree");
    if (!index.indices().empty() && index.indices().back() > n)
        throw DimensionMismatch("multi-index entry exceeds ambient dimension");
}

// det of the k x k minor of `m` (n x k' given as k' columns) picking rows I and columns S.
Rational minor_det(std::span<const Vector> columns, const MultiIndex &rows, const MultiIndex &cols) {
    const auto k = static_cast<std::size_t>(rows.size());
    Matrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            minor(r, c) = columns[static_cast<std::size_t>(cols.indices()[c]) - 1]
                                 [static_cast<std::size_t>(rows.indices()[r]) - 1];
    return determinant(minor);
}

} // namespace

MultiIndex::MultiIndex(std::vector<int> indices) : m_indices(std::move(indices)) {
    for (std::size_t i = 0; i < m_indices.size(); ++i) {
        if (m_indices[i] < 1) throw DimensionMismatch("multi-index entries are 1-based");
        if (i > 0 && m_indices[i - 1] >= m_indices[i]) throw DimensionMismatch("multi-index must be strictly increasing");
    }
}

bool MultiIndex::contains(int i) const { return std::binary_search(m_indices.begin(), m_indices.end(), i); }

std::vector<MultiIndex> multi_indices(int n, int k) {
    check_degree(n, k);
    std::vector<MultiIndex> out;
    std::vector<int> combo(static_cast<std::size_t>(k));
    std::iota(combo.begin(), combo.end(), 1);
    for (;;) {
        out.emplace_back(combo);
        int i = k - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j) - 1] + 1;
    }
    return out;
}

// ConstantForm

ConstantForm::ConstantForm(int n, int k) : m_n(n), m_k(k) { check_degree(n, k); }

ConstantForm ConstantForm::monomial(int n, const MultiIndex &index, Rational coeff) {
    ConstantForm w(n, index.size());
    w.add_term(index, coeff);
    return w;
}

Rational ConstantForm::coefficient(const MultiIndex &index) const {
    auto it = m_terms.find(index);
    return it == m_terms.end() ? Rational(0) : it->second;
}

void ConstantForm::add_term(const MultiIndex &index, const Rational &coeff) {
    check_index(m_n, m_k, index);
    if (coeff.is_zero()) return;
    Rational &slot = m_terms[index];
    slot += coeff;
    if (slot.is_zero()) m_terms.erase(index);
}

ConstantForm &ConstantForm::operator+=(const ConstantForm &rhs) {
    if (rhs.m_n != m_n || rhs.m_k != m_k) throw DegreeMismatch("adding constant forms of different shape");
    for (const auto &[index, coeff] : rhs.m_terms) add_term(index, coeff);
    return *this;
}

ConstantForm &ConstantForm::operator*=(const Rational &s) {
    if (s.is_zero()) m_terms.clear();
    for (auto &[index, coeff] : m_terms) coeff *= s;
    return *this;
}

// AffineForm

AffineForm::AffineForm(int n, int k) : m_n(n), m_k(k) { check_degree(n, k); }

AffineForm AffineForm::function(const AffineFunction &f) {
    AffineForm w(f.ambient_dim(), 0);
    w.add_term(MultiIndex{}, f);
    return w;
}

AffineFunction AffineForm::coefficient(const MultiIndex &index) const {
    auto it = m_terms.find(index);
    return it == m_terms.end() ? AffineFunction(m_n) : it->second;
}

void AffineForm::add_term(const MultiIndex &index, const AffineFunction &coeff) {
    check_index(m_n, m_k, index);
    if (coeff.ambient_dim() != m_n) throw DimensionMismatch("coefficient lives on a different space than the form");
    if (coeff.is_zero()) return;
    auto [it, inserted] = m_terms.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) m_terms.erase(it);
    }
}

AffineForm &AffineForm::operator+=(const AffineForm &rhs) {
    if (rhs.m_n != m_n || rhs.m_k != m_k) throw DegreeMismatch("adding forms of different shape");
    for (const auto &[index, coeff] : rhs.m_terms) add_term(index, coeff);
    return *this;
}

AffineForm &AffineForm::operator*=(const Rational &s) {
    if (s.is_zero()) m_terms.clear();
    for (auto &[index, coeff] : m_terms) coeff *= s;
    return *this;
}

// Operations

ConstantForm wedge(const ConstantForm &a, const ConstantForm &b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("wedge of forms on different spaces");
    const int n = a.ambient_dim();
    if (a.degree() + b.degree() > n)
        throw DegreeOverflow("wedge degree " + std::to_string(a.degree() + b.degree()) + " exceeds " + std::to_string(n));

    ConstantForm out(n, a.degree() + b.degree());
    for (const auto &[ia, ca] : a.terms()) {
        for (const auto &[ib, cb] : b.terms()) {
            std::vector<int> merged = ia.indices();
            merged.insert(merged.end(), ib.indices().begin(), ib.indices().end());
            const int sign = permutation_sign(merged);
            std::sort(merged.begin(), merged.end());
            if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) continue;
            out.add_term(MultiIndex(std::move(merged)), sign == 1 ? ca * cb : -(ca * cb));
        }
    }
    return out;
}

AffineForm scale_by_affine(const AffineFunction &f, const ConstantForm &w) {
    if (f.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("scalar and form on different spaces");
    AffineForm out(w.ambient_dim(), w.degree());
    for (const auto &[index, coeff] : w.terms()) out.add_term(index, coeff * f);
    return out;
}

AffineForm pullback(const AffineForm &form, const Face &face) {
    if (face.ambient_dim() != form.ambient_dim())
        throw DimensionMismatch("face and form live in different simplices");
    if (face.degree() < form.degree())
        throw DimensionMismatch("cannot pull a " + std::to_string(form.degree()) + "-form back to a " +
                                std::to_string(face.degree()) + "-face");

    const AffineMap map = face_parametrization(face);
    const int kt = face.degree();
    const auto target_indices = multi_indices(kt, form.degree());

    AffineForm out(kt, form.degree());
    for (const auto &[index, coeff] : form.terms()) {
        // coeff(origin + C t) as an affine function of t
        Vector grad_t(static_cast<std::size_t>(kt));
        for (std::size_t s = 0; s < grad_t.size(); ++s)
            for (std::size_t j = 0; j < map.origin.size(); ++j)
                if (!coeff.gradient()[j].is_zero()) grad_t[s] += coeff.gradient()[j] * map.columns[s][j];
        const AffineFunction composed(coeff(map.origin), std::move(grad_t));

        for (const auto &target : target_indices) {
            const Rational det = minor_det(map.columns, index, target);
            if (!det.is_zero()) out.add_term(target, det * composed);
        }
    }
    return out;
}

bool is_constant(const AffineForm &form) {
    return std::all_of(form.terms().begin(), form.terms().end(),
                       [](const auto &term) { return term.second.is_constant(); });
}

Rational evaluate(const AffineForm &form, std::span<const Rational> point, std::span<const Vector> vectors) {
    const int n = form.ambient_dim();
    if (static_cast<int>(point.size()) != n) throw DimensionMismatch("evaluation point has wrong dimension");
    if (static_cast<int>(vectors.size()) != form.degree())
        throw DimensionMismatch("expected " + std::to_string(form.degree()) + " tangent vectors");
    for (const auto &v : vectors)
        if (static_cast<int>(v.size()) != n) throw DimensionMismatch("tangent vector has wrong dimension");

    MultiIndex all_columns;
    {
        std::vector<int> cols(vectors.size());
        std::iota(cols.begin(), cols.end(), 1);
        all_columns = MultiIndex(std::move(cols));
    }
    Rational value;
    for (const auto &[index, coeff] : form.terms()) value += coeff(point) * minor_det(vectors, index, all_columns);
    return value;
}

} // namespace whitneyforms
