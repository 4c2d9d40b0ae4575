#pragma once

#include <string>

#include <whitneyforms/forms.hpp>
#include <whitneyforms/simplicial.hpp>

namespace whitneyforms {

// Plain text such as "x1 dx2 - x2 dx1" or "6 dx1^dx2^dx3". Terms are
// expanded into monomials and ordered by x-variable (constants first), then
// by multi-index.
std::string to_text(const AffineForm &w);
std::string to_latex(const AffineForm &w);

// "3/2 [0,1] + 5 [1,2]"
std::string to_text(const Cochain &c);

} // namespace whitneyforms
