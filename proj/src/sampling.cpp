#include <whitneyforms/sampling.hpp>

namespace whitneyforms {

Rational random_rational(std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 10);
    const long p = num(rng);
    return Rational(p, den(rng));
}

Cochain random_cochain(int n, int k, std::mt19937_64 &rng) {
    Cochain c(n, k);
    for (const auto &face : enumerate_faces(n, k)) c.add(face, random_rational(rng));
    return c;
}

AffineForm random_affine_form(int n, int k, std::mt19937_64 &rng) {
    AffineForm w(n, k);
    for (const auto &index : multi_indices(n, k)) {
        Rational b = random_rational(rng);
        Vector grad(static_cast<std::size_t>(n));
        for (auto &a : grad) a = random_rational(rng);
        w.add_term(index, AffineFunction(std::move(b), std::move(grad)));
    }
    return w;
}

std::mt19937_64 cell_rng(std::uint64_t seed, int n, int k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)};
    return std::mt19937_64(seq);
}

} // namespace whitneyforms
