#include <whitneyforms/derham.hpp>
#include <whitneyforms/errors.hpp>

#include <numeric>
#include <string>

namespace whitneyforms {

Rational integrate_over_face(const AffineForm &form, const Face &face) {
    if (face.ambient_dim() != form.ambient_dim()) throw DimensionMismatch("face and form live in different simplices");
    if (face.degree() != form.degree())
        throw DegreeMismatch("integrating a " + std::to_string(form.degree()) + "-form over a " +
                             std::to_string(face.degree()) + "-face");

    const int k = face.degree();
    const AffineForm pulled = pullback(form, face);

    std::vector<int> top(static_cast<std::size_t>(k));
    std::iota(top.begin(), top.end(), 1);
    const AffineFunction coeff = pulled.coefficient(MultiIndex(std::move(top)));

    Rational slope_sum;
    for (const auto &a : coeff.gradient()) slope_sum += a;
    Rational value = coeff.constant() / Rational::factorial(k) + slope_sum / Rational::factorial(k + 1);
    return face.sign() == 1 ? value : -value;
}

Cochain derham(const AffineForm &form) {
    Cochain out(form.ambient_dim(), form.degree());
    for (const auto &face : enumerate_faces(form.ambient_dim(), form.degree()))
        out.add(face, integrate_over_face(form, face));
    return out;
}

} // namespace whitneyforms
