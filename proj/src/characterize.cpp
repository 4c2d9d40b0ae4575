#include <whitneyforms/characterize.hpp>
#include <whitneyforms/derham.hpp>
#include <whitneyforms/errors.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace whitneyforms {

namespace {

void check_range(int n, int k, int k_min, int k_max, const char *what) {
    if (n < 0 || k < k_min || k > k_max)
        throw BadDegree(std::string(what) + ": degree k=" + std::to_string(k) + " not allowed for n=" + std::to_string(n));
}

void check_cochain(int n, int k, const Cochain &c) {
    if (c.ambient_dim() != n) throw DimensionMismatch("cochain lives on a simplex of different dimension");
    if (c.degree() != k) throw DegreeMismatch("cochain degree does not match k");
}

MultiIndex top_index(int k) {
    std::vector<int> top(static_cast<std::size_t>(k));
    std::iota(top.begin(), top.end(), 1);
    return MultiIndex(std::move(top));
}

// Pulled-back coefficient of dt^1 ^ ... ^ dt^k on `face`, as linear
// functionals of the unknowns: its constant term and its k slopes.
struct FaceFunctionals {
    Vector constant;
    std::vector<Vector> slopes;
};

FaceFunctionals face_functionals(const UnknownLayout &layout, const Face &face) {
    const int k = layout.degree();
    const MultiIndex top = top_index(k);
    FaceFunctionals out{Vector(layout.size()), std::vector<Vector>(static_cast<std::size_t>(k), Vector(layout.size()))};
    for (std::size_t u = 0; u < layout.size(); ++u) {
        const AffineFunction coeff = pullback(layout.basis_form(u), face).coefficient(top);
        out.constant[u] = coeff.constant();
        for (std::size_t s = 0; s < out.slopes.size(); ++s) out.slopes[s][u] = coeff.gradient()[s];
    }
    return out;
}

std::vector<std::size_t> support(std::span<const Rational> functional) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < functional.size(); ++i)
        if (!functional[i].is_zero()) out.push_back(i);
    return out;
}

} // namespace

std::string Unknown::label() const {
    std::string idx = "(";
    for (std::size_t i = 0; i < index.indices().size(); ++i) {
        if (i > 0) idx += ",";
        idx += std::to_string(index.indices()[i]);
    }
    idx += ")";
    return variable == 0 ? "b_" + idx : "a_" + idx + "," + std::to_string(variable);
}

UnknownLayout::UnknownLayout(int n, int k) : m_n(n), m_k(k) {
    for (const auto &index : multi_indices(n, k))
        for (int j = 0; j <= n; ++j) m_unknowns.push_back(Unknown{index, j});
}

std::size_t UnknownLayout::position(const MultiIndex &index, int variable) const {
    auto it = std::find(m_unknowns.begin(), m_unknowns.end(), Unknown{index, variable});
    if (it == m_unknowns.end()) throw DimensionMismatch("unknown not present in layout");
    return static_cast<std::size_t>(it - m_unknowns.begin());
}

AffineForm UnknownLayout::basis_form(std::size_t i) const {
    const Unknown &u = m_unknowns.at(i);
    const AffineFunction coeff = u.variable == 0 ? AffineFunction::constant_function(m_n, Rational(1))
                                                 : AffineFunction::coordinate(m_n, u.variable);
    AffineForm w(m_n, m_k);
    w.add_term(u.index, coeff);
    return w;
}

AffineForm UnknownLayout::assemble(std::span<const Rational> values) const {
    if (values.size() != m_unknowns.size()) throw DimensionMismatch("value count does not match unknown layout");
    AffineForm w(m_n, m_k);
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero()) w += values[i] * basis_form(i);
    return w;
}

ConstraintSystem build_system_any_degree(int n, int k, const Cochain &c) {
    check_range(n, k, 0, n, "build_system");
    check_cochain(n, k, c);

    ConstraintSystem sys{UnknownLayout(n, k), Matrix(), Matrix(), Vector()};
    const std::size_t unknowns = sys.layout.size();
    sys.constancy_rows = Matrix(0, unknowns);
    sys.integral_rows = Matrix(0, unknowns);

    const auto faces = enumerate_faces(n, k);
    Vector integral_rhs;
    for (const auto &face : faces) {
        FaceFunctionals f = face_functionals(sys.layout, face);
        for (const auto &slope : f.slopes) sys.constancy_rows.append_row(slope);

        // Integral of (c + sum_s a_s t^s) over the standard k-simplex.
        Vector row(unknowns);
        const Rational vol = Rational(1) / Rational::factorial(k);
        const Rational moment = Rational(1) / Rational::factorial(k + 1);
        for (std::size_t u = 0; u < unknowns; ++u) {
            row[u] = f.constant[u] * vol;
            for (const auto &slope : f.slopes) row[u] += slope[u] * moment;
        }
        sys.integral_rows.append_row(row);
        integral_rhs.push_back(cochain_eval(c, face));
    }

    sys.rhs.assign(sys.constancy_rows.rows(), Rational(0));
    sys.rhs.insert(sys.rhs.end(), integral_rhs.begin(), integral_rhs.end());
    return sys;
}

ConstraintSystem build_system(int n, int k, const Cochain &c) {
    check_range(n, k, 1, n, "build_system");
    return build_system_any_degree(n, k, c);
}

std::size_t lambda_e_dimension(int n, int k) {
    check_range(n, k, 0, n, "lambda_e_dimension");
    const ConstraintSystem sys = build_system_any_degree(n, k, Cochain(n, k));
    return sys.layout.size() - rank(sys.constancy_rows);
}

AffineForm solve_characterization_linear(int n, int k, const Cochain &c) {
    const ConstraintSystem sys = build_system_any_degree(n, k, c);
    try {
        return sys.layout.assemble(solve(sys.combined(), sys.rhs));
    } catch (const NotUnique &e) {
        throw NonUnique(std::string("characterization system is not uniquely solvable: ") + e.what());
    } catch (const NoSolution &e) {
        throw Inconsistent(std::string("characterization system has no solution: ") + e.what());
    }
}

AffineForm solve_characterization(int n, int k, const Cochain &c) {
    check_range(n, k, 0, n, "solve_characterization");
    check_cochain(n, k, c);

    if (k == 0) {
        // Affine interpolation of the vertex values.
        const Rational a0 = cochain_eval(c, Face(n, {0}));
        Vector gradient(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) gradient[static_cast<std::size_t>(i) - 1] = cochain_eval(c, Face(n, {i})) - a0;
        return AffineForm::function(AffineFunction(a0, std::move(gradient)));
    }
    if (k == n) {
        // Constant top form; the standard simplex has volume 1/n!.
        std::vector<int> all(static_cast<std::size_t>(n) + 1);
        std::iota(all.begin(), all.end(), 0);
        const Rational value = cochain_eval(c, Face(n, all));
        AffineForm w(n, n);
        w.add_term(top_index(n), AffineFunction::constant_function(n, value * Rational::factorial(n)));
        return w;
    }
    return solve_characterization_linear(n, k, c);
}

KernelCertificate kernel_is_trivial(int n, int k) {
    check_range(n, k, 1, n, "kernel_is_trivial");
    // Top degree: the only face is the simplex itself, so a constant
    // coefficient with zero integral is zero.
    if (k == n) return KernelCertificate{true, {}};

    const ConstraintSystem sys = build_system(n, k, Cochain(n, k));
    KernelCertificate cert;
    cert.basis = nullspace(sys.combined());
    cert.trivial = cert.basis.empty();
    return cert;
}

ProofTrace proof_trace(int n, int k) {
    check_range(n, k, 1, n - 1, "proof_trace");
    const UnknownLayout layout(n, k);
    const auto &unknowns = layout.unknowns();

    ProofTrace trace;
    trace.n = n;
    trace.k = k;
    std::vector<int> kill_count(layout.size(), 0);

    // Stage 1: on the coordinate face tau_J only dx^J survives and the
    // variables outside J vanish, so each equation isolates one unknown.
    std::vector<bool> killed_in_stage1(layout.size(), false);
    for (const auto &J : multi_indices(n, k)) {
        std::vector<int> verts{0};
        verts.insert(verts.end(), J.indices().begin(), J.indices().end());
        CoordinateFaceStep step{J, Face(n, verts), {}};

        const FaceFunctionals f = face_functionals(layout, step.face);
        std::vector<const Vector *> equations{&f.constant};
        for (const auto &slope : f.slopes) equations.push_back(&slope);
        for (const Vector *eq : equations) {
            const auto supp = support(*eq);
            if (supp.size() != 1) continue;
            killed_in_stage1[supp.front()] = true;
            ++kill_count[supp.front()];
            step.killed.push_back(unknowns[supp.front()].label());
        }
        trace.stage1.push_back(std::move(step));
    }

    // Stage 2: on the inclined face [e_m, e_L] the constant term of the
    // pulled-back coefficient is carried by a_{L,m} alone once stage 1 holds.
    for (const auto &L : multi_indices(n, k)) {
        for (int m = 1; m <= n; ++m) {
            if (L.contains(m)) continue;
            std::vector<int> verts{m};
            verts.insert(verts.end(), L.indices().begin(), L.indices().end());
            InclinedFaceStep step{L, m, Face(n, verts), {}, {}};

            FaceFunctionals f = face_functionals(layout, step.face);
            for (std::size_t u = 0; u < layout.size(); ++u)
                if (killed_in_stage1[u]) f.constant[u] = Rational(0);
            const auto supp = support(f.constant);
            for (auto u : supp) step.constant_term.emplace_back(unknowns[u].label(), f.constant[u]);
            if (supp.size() == 1) {
                ++kill_count[supp.front()];
                step.killed = unknowns[supp.front()].label();
            }
            trace.stage2.push_back(std::move(step));
        }
    }

    for (std::size_t u = 0; u < layout.size(); ++u) {
        if (kill_count[u] == 0) throw TraceIncomplete("unknown " + unknowns[u].label() + " survives both stages");
        if (kill_count[u] > 1) throw TraceIncomplete("unknown " + unknowns[u].label() + " eliminated more than once");
    }
    trace.complete = true;
    return trace;
}

} // namespace whitneyforms
