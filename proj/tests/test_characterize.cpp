#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <whitneyforms/characterize.hpp>
#include <whitneyforms/errors.hpp>
#include <whitneyforms/sampling.hpp>
#include <whitneyforms/whitney.hpp>

#include <numeric>
#include <random>
#include <set>

using namespace whitneyforms;

TEST_CASE("unknown layout") {
    const UnknownLayout layout(2, 1);
    REQUIRE(layout.size() == 6);
    std::vector<std::string> labels;
    for (const auto &u : layout.unknowns()) labels.push_back(u.label());
    CHECK(labels == std::vector<std::string>{"b_(1)", "a_(1),1", "a_(1),2", "b_(2)", "a_(2),1", "a_(2),2"});
    CHECK(UnknownLayout(4, 2).size() == 30);
    CHECK(layout.position(MultiIndex{2}, 1) == 4);

    std::mt19937_64 rng(1);
    Vector values(layout.size());
    for (auto &v : values) v = random_rational(rng);
    const AffineForm w = layout.assemble(values);
    CHECK(w.coefficient(MultiIndex{2}) == AffineFunction(values[3], Vector{values[4], values[5]}));
}

TEST_CASE("build_system shapes") {
    const auto sys21 = build_system(2, 1, Cochain(2, 1));
    CHECK(sys21.layout.size() == 6);
    CHECK(sys21.constancy_rows.rows() == 3);
    CHECK(sys21.integral_rows.rows() == 3);
    CHECK(sys21.rhs == Vector(6));

    const auto sys31 = build_system(3, 1, Cochain(3, 1));
    CHECK(sys31.layout.size() == 12);
    CHECK(sys31.constancy_rows.rows() == 6);
    CHECK(sys31.integral_rows.rows() == 6);

    const Cochain c = Cochain::basis(Face(2, {2, 1}));
    const auto sys = build_system(2, 1, c);
    CHECK(sys.rhs == Vector{0, 0, 0, 0, 0, -1});

    CHECK_THROWS_AS(build_system(2, 0, Cochain(2, 0)), BadDegree);
    CHECK_THROWS_AS(build_system(2, 3, Cochain(3, 3)), BadDegree);
    CHECK_THROWS_AS(build_system(2, 1, Cochain(2, 2)), DegreeMismatch);
}

TEST_CASE("constraint rows agree with direct pullback and integration") {
    // Each row is a linear functional; check it on a random form.
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto sys = build_system(n, k, Cochain(n, k));
            Vector values(sys.layout.size());
            for (auto &v : values) v = random_rational(rng);
            const AffineForm w = sys.layout.assemble(values);
            const Vector constancy = sys.constancy_rows * values;
            const Vector integrals = sys.integral_rows * values;
            std::vector<int> top(static_cast<std::size_t>(k));
            std::iota(top.begin(), top.end(), 1);
            std::size_t row = 0;
            const auto faces = enumerate_faces(n, k);
            for (std::size_t f = 0; f < faces.size(); ++f) {
                const AffineFunction coeff = pullback(w, faces[f]).coefficient(MultiIndex(top));
                for (const auto &slope : coeff.gradient()) CHECK(constancy[row++] == slope);
                // Centroid rule, exact for affine integrands.
                const Vector centroid(static_cast<std::size_t>(k), Rational(1, k + 1));
                CHECK(integrals[f] == coeff(centroid) / Rational::factorial(k));
            }
        }
    }
}

TEST_CASE("lambda_e dimension") {
    CHECK(lambda_e_dimension(3, 1) == 6);
    CHECK(lambda_e_dimension(4, 2) == 10);
    for (int n = 1; n <= 5; ++n) {
        CHECK(lambda_e_dimension(n, n) == 1);
        for (int k = 0; k <= n; ++k) {
            CHECK(lambda_e_dimension(n, k) == static_cast<std::size_t>(binomial(n + 1, k + 1)));
            // Dimension-count identity itself.
            CHECK(binomial(n, k) * (n + 1) - binomial(n + 1, k + 1) * k == binomial(n + 1, k + 1));
        }
    }
    CHECK_THROWS_AS(lambda_e_dimension(2, 3), BadDegree);
}

TEST_CASE("solve_characterization worked cases") {
    std::mt19937_64 rng(12);
    for (int n = 1; n <= 5; ++n) {
        const Cochain c0 = random_cochain(n, 0, rng);
        const Rational a0 = cochain_eval(c0, Face(n, {0}));
        Vector grad(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) grad[static_cast<std::size_t>(i) - 1] = cochain_eval(c0, Face(n, {i})) - a0;
        CHECK(solve_characterization(n, 0, c0) == AffineForm::function(AffineFunction(a0, grad)));

        std::vector<int> all(static_cast<std::size_t>(n) + 1);
        std::iota(all.begin(), all.end(), 0);
        std::vector<int> top(static_cast<std::size_t>(n));
        std::iota(top.begin(), top.end(), 1);
        AffineForm expected(n, n);
        expected.add_term(MultiIndex(top), AffineFunction::constant_function(n, Rational::factorial(n)));
        CHECK(solve_characterization(n, n, Cochain::basis(Face(n, all))) == expected);
    }

    AffineForm rotation(2, 1);
    rotation.add_term(MultiIndex{2}, AffineFunction::coordinate(2, 1));
    rotation.add_term(MultiIndex{1}, -AffineFunction::coordinate(2, 2));
    CHECK(solve_characterization(2, 1, Cochain::basis(Face(2, {1, 2}))) == rotation);
}

TEST_CASE("property: characterization reproduces Whitney forms") {
    std::mt19937_64 rng(0);
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto &tau : enumerate_faces(n, k)) {
                const Cochain c = Cochain::basis(tau);
                CHECK(solve_characterization(n, k, c) == whitney(c));
                CHECK(solve_characterization_linear(n, k, c) == whitney(c));
            }
            for (int s = 0; s < 5; ++s) {
                const Cochain c = random_cochain(n, k, rng);
                const AffineForm w = solve_characterization(n, k, c);
                CHECK(w == whitney(c));
                CHECK(solve_characterization(n, k, Rational(2) * c) == Rational(2) * w);
            }
        }
    }
}

TEST_CASE("kernel triviality") {
    CHECK(kernel_is_trivial(2, 1).trivial);
    CHECK(kernel_is_trivial(5, 2).trivial);
    const auto top = kernel_is_trivial(3, 3);
    CHECK(top.trivial);
    CHECK(top.basis.empty());
    CHECK_THROWS_AS(kernel_is_trivial(3, 0), BadDegree);
    CHECK_THROWS_AS(kernel_is_trivial(3, 4), BadDegree);

    // The general elimination agrees with the top-degree shortcut.
    for (int n = 1; n <= 5; ++n) {
        const auto sys = build_system(n, n, Cochain(n, n));
        CHECK(nullspace(sys.combined()).empty());
    }
}

TEST_CASE("dropping the integral rows leaves a kernel of dimension binom(n+1,k+1)") {
    // Constancy alone is not enough; the kernel certificate is meaningful.
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k) {
            const auto sys = build_system(n, k, Cochain(n, k));
            CHECK(static_cast<long long>(nullspace(sys.constancy_rows).size()) == binomial(n + 1, k + 1));
        }
}

TEST_CASE("proof trace worked cases") {
    const ProofTrace t = proof_trace(2, 1);
    CHECK(t.complete);
    REQUIRE(t.stage1.size() == 2);
    CHECK(t.stage1[0].face.vertices() == std::vector<int>{0, 1});
    CHECK(t.stage1[0].killed == std::vector<std::string>{"b_(1)", "a_(1),1"});

    const auto it = std::find_if(t.stage2.begin(), t.stage2.end(),
                                 [](const InclinedFaceStep &s) { return s.index == MultiIndex{2} && s.m == 1; });
    REQUIRE(it != t.stage2.end());
    CHECK(it->face.vertices() == std::vector<int>{1, 2});
    CHECK(it->killed == "a_(2),1");
    REQUIRE(it->constant_term.size() == 1);
    CHECK(it->constant_term[0].first == "a_(2),1");
    CHECK(it->constant_term[0].second == Rational(1));

    std::size_t kills = 0;
    const ProofTrace t31 = proof_trace(3, 1);
    for (const auto &s : t31.stage1) kills += s.killed.size();
    kills += t31.stage2.size();
    CHECK(kills == 12);

    CHECK_THROWS_AS(proof_trace(3, 3), BadDegree);
    CHECK_THROWS_AS(proof_trace(3, 0), BadDegree);
}

TEST_CASE("property: proof trace stages partition the unknowns") {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k < n; ++k) {
            const ProofTrace t = proof_trace(n, k);
            REQUIRE(t.complete);

            std::set<std::string> stage1, stage1_expected, stage2, stage2_expected;
            for (const auto &step : t.stage1) {
                stage1.insert(step.killed.begin(), step.killed.end());
                CHECK(step.killed.size() == static_cast<std::size_t>(k) + 1);
                stage1_expected.insert(Unknown{step.index, 0}.label());
                for (int j : step.index.indices()) stage1_expected.insert(Unknown{step.index, j}.label());
            }
            for (const auto &step : t.stage2) {
                stage2.insert(step.killed);
                CHECK(step.killed == Unknown{step.index, step.m}.label());
                CHECK(!step.index.contains(step.m));
            }
            for (const auto &L : multi_indices(n, k))
                for (int m = 1; m <= n; ++m)
                    if (!L.contains(m)) stage2_expected.insert(Unknown{L, m}.label());

            CHECK(stage1 == stage1_expected);
            CHECK(stage2 == stage2_expected);

            std::set<std::string> all;
            const UnknownLayout layout(n, k);
            for (const auto &u : layout.unknowns()) all.insert(u.label());
            std::set<std::string> both = stage1;
            both.insert(stage2.begin(), stage2.end());
            CHECK(both == all);
            CHECK(stage1.size() + stage2.size() == all.size());

            // Both certification routes agree.
            CHECK(kernel_is_trivial(n, k).trivial);
        }
    }
}
