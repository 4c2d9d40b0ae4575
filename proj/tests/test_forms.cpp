#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <whitneyforms/errors.hpp>
#include <whitneyforms/forms.hpp>
#include <whitneyforms/sampling.hpp>

#include <random>

using namespace whitneyforms;

namespace {

ConstantForm dx(int n, MultiIndex index, Rational c = Rational(1)) { return ConstantForm::monomial(n, index, c); }

ConstantForm random_constant_form(int n, int k, std::mt19937_64 &rng) {
    ConstantForm w(n, k);
    for (const auto &index : multi_indices(n, k)) w.add_term(index, random_rational(rng));
    return w;
}

AffineForm as_affine(const ConstantForm &w) {
    return scale_by_affine(AffineFunction::constant_function(w.ambient_dim(), Rational(1)), w);
}

Vector random_vector(int n, std::mt19937_64 &rng) {
    Vector v(static_cast<std::size_t>(n));
    for (auto &x : v) x = random_rational(rng);
    return v;
}

// Leibniz-formula determinant, independent of the elimination code.
Rational leibniz_det(const std::vector<std::vector<Rational>> &m) {
    const std::size_t k = m.size();
    if (k == 0) return Rational(1);
    std::vector<int> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
    Rational total;
    do {
        Rational term = Rational(permutation_sign(perm));
        for (std::size_t i = 0; i < k; ++i) term *= m[i][static_cast<std::size_t>(perm[i])];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Pairing of a constant 1-form with a vector.
Rational pair(const ConstantForm &alpha, const Vector &v) {
    Rational s;
    for (const auto &[index, c] : alpha.terms()) s += c * v[static_cast<std::size_t>(index.indices()[0]) - 1];
    return s;
}

} // namespace

TEST_CASE("multi-index validation") {
    CHECK_NOTHROW(MultiIndex{1, 3});
    CHECK_THROWS_AS(MultiIndex({2, 1}), DimensionMismatch);
    CHECK_THROWS_AS(MultiIndex({0}), DimensionMismatch);
    CHECK(multi_indices(3, 2) == std::vector<MultiIndex>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(multi_indices(3, 0) == std::vector<MultiIndex>{MultiIndex{}});
}

TEST_CASE("wedge") {
    CHECK(wedge(dx(2, {1}), dx(2, {1})) == ConstantForm(2, 2));
    CHECK(wedge(dx(2, {2}), dx(2, {1})) == dx(2, {1, 2}, Rational(-1)));
    CHECK(wedge(dx(3, {1}) + dx(3, {2}), dx(3, {3})) == dx(3, {1, 3}) + dx(3, {2, 3}));
    CHECK_THROWS_AS(wedge(dx(2, {1, 2}), dx(2, {1})), DegreeOverflow);
}

TEST_CASE("property: wedge of 1-forms evaluates to the pairing determinant") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            std::vector<ConstantForm> alphas;
            ConstantForm product = dx(n, {});
            for (int i = 0; i < k; ++i) {
                alphas.push_back(random_constant_form(n, 1, rng));
                product = wedge(product, alphas.back());
            }
            std::vector<Vector> vs;
            for (int i = 0; i < k; ++i) vs.push_back(random_vector(n, rng));
            std::vector<std::vector<Rational>> pairing(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
            for (std::size_t i = 0; i < pairing.size(); ++i)
                for (std::size_t j = 0; j < pairing.size(); ++j) pairing[i][j] = pair(alphas[i], vs[j]);
            CHECK(evaluate(as_affine(product), Vector(static_cast<std::size_t>(n)), vs) == leibniz_det(pairing));
        }
    }
}

TEST_CASE("property: wedge is bilinear, associative and graded-commutative") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 4; ++n) {
        for (int p = 0; p <= n; ++p) {
            for (int q = 0; p + q <= n; ++q) {
                const auto a = random_constant_form(n, p, rng);
                const auto a2 = random_constant_form(n, p, rng);
                const auto b = random_constant_form(n, q, rng);
                const Rational s = random_rational(rng);
                const Rational graded = (p * q) % 2 == 0 ? Rational(1) : Rational(-1);
                CHECK(wedge(a, b) == graded * wedge(b, a));
                CHECK(wedge(s * a + a2, b) == s * wedge(a, b) + wedge(a2, b));
                for (int r = 0; p + q + r <= n; ++r) {
                    const auto c = random_constant_form(n, r, rng);
                    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
                }
            }
        }
    }
}

TEST_CASE("scale_by_affine") {
    const AffineForm one_dx1 = scale_by_affine(AffineFunction::constant_function(2, Rational(1)), dx(2, {1}));
    CHECK(one_dx1.coefficient(MultiIndex{1}) == AffineFunction::constant_function(2, Rational(1)));

    const AffineForm x1dx2 = scale_by_affine(AffineFunction::coordinate(2, 1), dx(2, {2}));
    CHECK(x1dx2.coefficient(MultiIndex{2}) == AffineFunction::coordinate(2, 1));
    CHECK(x1dx2.terms().size() == 1);

    const AffineFunction nu0(Rational(1), Vector{-1, -1});
    const AffineForm w = scale_by_affine(nu0, dx(2, {1}));
    CHECK(w.coefficient(MultiIndex{1}) == nu0);
}

TEST_CASE("pullback") {
    // x^1 dx^2 - x^2 dx^1 on [1,2]: x = (1-t, t), dx^1 = -dt, dx^2 = dt.
    AffineForm w(2, 1);
    w.add_term(MultiIndex{2}, AffineFunction::coordinate(2, 1));
    w.add_term(MultiIndex{1}, -AffineFunction::coordinate(2, 2));
    const AffineForm pulled = pullback(w, Face(2, {1, 2}));
    CHECK(pulled.ambient_dim() == 1);
    CHECK(pulled.coefficient(MultiIndex{1}) == AffineFunction::constant_function(1, Rational(1)));

    // On a coordinate face [0, e_j...] variables outside J vanish.
    std::mt19937_64 rng(8);
    const AffineForm general = random_affine_form(3, 2, rng);
    const AffineForm on_face = pullback(general, Face(3, {0, 1, 3}));
    const AffineFunction c13 = general.coefficient(MultiIndex{1, 3});
    CHECK(on_face.coefficient(MultiIndex{1, 2}) ==
          AffineFunction(c13.constant(), Vector{c13.gradient()[0], c13.gradient()[2]}));

    CHECK(pullback(AffineForm(3, 2), Face(3, {1, 2, 3})).is_zero());
    CHECK_THROWS_AS(pullback(general, Face(3, {0, 1})), DimensionMismatch);
    CHECK_THROWS_AS(pullback(general, Face(2, {0, 1})), DimensionMismatch);
}

TEST_CASE("zero-form pullback to a vertex is evaluation") {
    const AffineFunction f(Rational(2), Vector{Rational(3), Rational(-1, 2)});
    const AffineForm pulled = pullback(AffineForm::function(f), Face(2, {2}));
    CHECK(pulled.ambient_dim() == 0);
    CHECK(pulled.coefficient(MultiIndex{}).constant() == f(vertex_point(2, 2)));
}

TEST_CASE("is_constant") {
    CHECK(is_constant(as_affine(dx(2, {1, 2}, Rational(5)))));
    CHECK_FALSE(is_constant(scale_by_affine(AffineFunction::coordinate(2, 1), dx(2, {2}))));

    AffineForm sum = scale_by_affine(AffineFunction(Rational(1), Vector{-1, -1}), dx(2, {1}));
    sum += scale_by_affine(AffineFunction::coordinate(2, 1), dx(2, {1}));
    sum += scale_by_affine(AffineFunction::coordinate(2, 2), dx(2, {1}));
    CHECK(is_constant(sum));
    CHECK(sum == as_affine(dx(2, {1})));
}

TEST_CASE("evaluate") {
    const Vector e1{1, 0}, e2{0, 1};
    CHECK(evaluate(as_affine(dx(2, {1})), Vector{Rational(3), Rational(7)}, std::vector<Vector>{e1}) == Rational(1));
    CHECK(evaluate(as_affine(dx(2, {1, 2})), Vector{0, 0}, std::vector<Vector>{e2, e1}) == Rational(-1));
    CHECK(evaluate(scale_by_affine(AffineFunction::coordinate(2, 1), dx(2, {2})), Vector{Rational(1, 2), Rational(0)},
                   std::vector<Vector>{e2}) == Rational(1, 2));
    CHECK_THROWS_AS(evaluate(as_affine(dx(2, {1})), Vector{0}, std::vector<Vector>{e1}), DimensionMismatch);
    CHECK_THROWS_AS(evaluate(as_affine(dx(2, {1})), Vector{0, 0}, std::vector<Vector>{}), DimensionMismatch);
}

TEST_CASE("property: pullback commutes with evaluation (chain rule)") {
    std::mt19937_64 rng(42);
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int kt = k; kt <= n; ++kt) {
                const AffineForm w = random_affine_form(n, k, rng);
                auto face = enumerate_faces(n, kt)[rng() % static_cast<std::size_t>(binomial(n + 1, kt + 1))];
                auto verts = face.vertices();
                std::shuffle(verts.begin(), verts.end(), rng);
                const Face shuffled(n, verts);

                const AffineMap map = face_parametrization(shuffled);
                const AffineForm pulled = pullback(w, shuffled);
                const Vector t = random_vector(kt, rng);
                std::vector<Vector> dts, dxs;
                for (int i = 0; i < k; ++i) {
                    dts.push_back(random_vector(kt, rng));
                    dxs.push_back(map.push_forward(dts.back()));
                }
                CHECK(evaluate(pulled, t, dts) == evaluate(w, map(t), dxs));

                // Linearity of pullback.
                const AffineForm v = random_affine_form(n, k, rng);
                const Rational s = random_rational(rng);
                CHECK(pullback(s * w + v, shuffled) == s * pullback(w, shuffled) + pullback(v, shuffled));
            }
        }
    }
}

TEST_CASE("property: evaluate is alternating and multilinear") {
    std::mt19937_64 rng(77);
    for (int n = 2; n <= 4; ++n) {
        for (int k = 2; k <= n; ++k) {
            const AffineForm w = random_affine_form(n, k, rng);
            const Vector p = random_vector(n, rng);
            std::vector<Vector> vs;
            for (int i = 0; i < k; ++i) vs.push_back(random_vector(n, rng));
            const Rational base = evaluate(w, p, vs);

            auto swapped = vs;
            std::swap(swapped[0], swapped[1]);
            CHECK(evaluate(w, p, swapped) == -base);

            const Rational s = random_rational(rng);
            const Vector extra = random_vector(n, rng);
            auto combined = vs;
            for (std::size_t j = 0; j < extra.size(); ++j) combined[0][j] = s * vs[0][j] + extra[j];
            auto only_extra = vs;
            only_extra[0] = extra;
            CHECK(evaluate(w, p, combined) == s * base + evaluate(w, p, only_extra));
        }
    }
}
