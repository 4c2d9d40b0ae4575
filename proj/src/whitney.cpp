#include <whitneyforms/whitney.hpp>
#include <whitneyforms/errors.hpp>

namespace whitneyforms {

ConstantForm barycentric_differential(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw DimensionMismatch("barycentric index out of range");
    if (i > 0) return ConstantForm::monomial(n, MultiIndex{i});
    ConstantForm dnu0(n, 1);
    for (int j = 1; j <= n; ++j) dnu0.add_term(MultiIndex{j}, Rational(-1));
    return dnu0;
}

AffineForm whitney_basis_form(const Face &face) {
    const int n = face.ambient_dim();
    const int k = face.degree();
    const auto &verts = face.vertices();

    if (n == 0) {
        // The 0-simplex: the only Whitney form is the constant 1.
        return face.sign() * AffineForm::function(AffineFunction::constant_function(0, Rational(1)));
    }

    const auto nu = barycentric_functions(n);
    AffineForm out(n, k);
    for (int j = 0; j <= k; ++j) {
        ConstantForm product = ConstantForm::monomial(n, MultiIndex{});
        for (int s = 0; s <= k; ++s)
            if (s != j) product = wedge(product, barycentric_differential(n, verts[static_cast<std::size_t>(s)]));
        const Rational alternating = j % 2 == 0 ? Rational(1) : Rational(-1);
        out += alternating * scale_by_affine(nu[static_cast<std::size_t>(verts[static_cast<std::size_t>(j)])], product);
    }
    return (Rational::factorial(k) * face.sign()) * out;
}

AffineForm whitney(const Cochain &c) {
    AffineForm out(c.ambient_dim(), c.degree());
    for (const auto &[verts, coeff] : c.terms()) out += coeff * whitney_basis_form(Face(c.ambient_dim(), verts));
    return out;
}

} // namespace whitneyforms
