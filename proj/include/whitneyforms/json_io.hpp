#pragma once

#include <string>

#include <json.hpp>

#include <whitneyforms/characterize.hpp>
#include <whitneyforms/forms.hpp>
#include <whitneyforms/rational.hpp>
#include <whitneyforms/simplicial.hpp>

namespace whitneyforms {

using Json = nlohmann::json;

// Rationals travel as strings "p/q" (or "p"); integer JSON numbers are also
// accepted on input.
Json rational_to_json(const Rational &r);
Rational rational_from_json(const Json &j);

// {"n": 2, "k": 1, "terms": [{"face": [0,1], "coeff": "3/2"}]}
// Faces may come in any vertex order; the permutation sign is folded into the
// coefficient and repeated faces are summed.
Json cochain_to_json(const Cochain &c);
Cochain cochain_from_json(const Json &j);

// {"n": 2, "k": 1, "terms": [{"dx": [1], "const": "1", "grad": ["0", "-1"]}]}
Json form_to_json(const AffineForm &w);
AffineForm form_from_json(const Json &j);

Json trace_to_json(const ProofTrace &trace);

// Parses text as JSON, turning syntax errors into ParseError.
Json parse_json(const std::string &text);

} // namespace whitneyforms
