#pragma once

#include <whitneyforms/forms.hpp>
#include <whitneyforms/simplicial.hpp>

namespace whitneyforms {

// d(nu_i) as a constant 1-form: d nu_0 = -(dx^1 + ... + dx^n), d nu_i = dx^i.
ConstantForm barycentric_differential(int n, int i);

// Whitney form of a single face [i_0, ..., i_k]:
//   k! sum_j (-1)^j nu_{i_j} d nu_{i_0} ^ ... (omit j) ... ^ d nu_{i_k},
// multiplied by the face sign.
AffineForm whitney_basis_form(const Face &face);

// W(c) = sum over canonical faces of <c, tau> times the basis form of tau.
AffineForm whitney(const Cochain &c);

} // namespace whitneyforms
