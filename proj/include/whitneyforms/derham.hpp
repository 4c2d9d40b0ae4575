#pragma once

#include <whitneyforms/forms.hpp>
#include <whitneyforms/simplicial.hpp>

namespace whitneyforms {

// Exact integral of a k-form over an oriented k-face. The pulled-back form
// (c + sum_s a_s t^s) dt^1 ^ ... ^ dt^k integrates to c/k! + (sum_s a_s)/(k+1)!
// over the standard k-simplex; the face sign is applied last. For k = 0 this
// is evaluation at the vertex.
Rational integrate_over_face(const AffineForm &form, const Face &face);

// The cochain tau -> integral of `form` over tau, for every k-face tau.
Cochain derham(const AffineForm &form);

} // namespace whitneyforms
