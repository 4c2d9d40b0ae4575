#pragma once

#include <cstdint>
#include <random>

#include <whitneyforms/forms.hpp>
#include <whitneyforms/simplicial.hpp>

namespace whitneyforms {

// Reproducible small rationals: numerator in [-10, 10], denominator in [1, 10].
Rational random_rational(std::mt19937_64 &rng);

// Random coefficient on every canonical k-face.
Cochain random_cochain(int n, int k, std::mt19937_64 &rng);

// Random affine coefficient on every k-multi-index.
AffineForm random_affine_form(int n, int k, std::mt19937_64 &rng);

// Generator for the (n, k) cell derived from a user seed, so cells are
// independent of evaluation order.
std::mt19937_64 cell_rng(std::uint64_t seed, int n, int k);

} // namespace whitneyforms
