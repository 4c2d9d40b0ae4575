#pragma once

#include <string>
#include <utility>
#include <vector>

#include <whitneyforms/forms.hpp>
#include <whitneyforms/linalg.hpp>
#include <whitneyforms/simplicial.hpp>

namespace whitneyforms {

// One scalar unknown of a general affine-coefficient k-form: b_I when
// variable == 0, otherwise a_{I,variable}.
struct Unknown {
    MultiIndex index;
    int variable = 0;

    std::string label() const;
    friend bool operator==(const Unknown &, const Unknown &) = default;
};

// Unknown ordering: multi-indices lexicographically, and within each
// b_I, a_{I,1}, ..., a_{I,n}.
class UnknownLayout {
public:
    UnknownLayout(int n, int k);

    int ambient_dim() const { return m_n; }
    int degree() const { return m_k; }
    std::size_t size() const { return m_unknowns.size(); }
    const std::vector<Unknown> &unknowns() const { return m_unknowns; }

    std::size_t position(const MultiIndex &index, int variable) const;

    // The form with unknown `i` set to 1 and every other unknown 0.
    AffineForm basis_form(std::size_t i) const;
    AffineForm assemble(std::span<const Rational> values) const;

private:
    int m_n;
    int m_k;
    std::vector<Unknown> m_unknowns;
};

struct ConstraintSystem {
    UnknownLayout layout;
    Matrix constancy_rows; // k rows per k-face: gradient of the pulled-back coefficient
    Matrix integral_rows;  // one row per k-face: the face integral
    Vector rhs;            // zeros for constancy rows, then <c, tau> per face

    Matrix combined() const { return Matrix::stack(constancy_rows, integral_rows); }
};

// Constraint system for 1 <= k <= n.
ConstraintSystem build_system(int n, int k, const Cochain &c);

// Same assembly without the degree restriction; for k = 0 there are no
// constancy rows. Used to cross-check the closed-form degrees.
ConstraintSystem build_system_any_degree(int n, int k, const Cochain &c);

// Unknown count minus the rank of the constancy block.
std::size_t lambda_e_dimension(int n, int k);

// The form fixed by affine coefficients, constant face pullbacks and the
// face integrals of c. k = 0 and k = n use closed forms.
AffineForm solve_characterization(int n, int k, const Cochain &c);

// Always solves the exact linear system, for 0 <= k <= n.
AffineForm solve_characterization_linear(int n, int k, const Cochain &c);

struct KernelCertificate {
    bool trivial = false;
    std::vector<Vector> basis; // kernel vectors in UnknownLayout order when not trivial
};

// Whether a form with constant pullbacks and zero face integrals must vanish.
// 1 <= k <= n; the top degree is settled without elimination.
KernelCertificate kernel_is_trivial(int n, int k);

struct CoordinateFaceStep {
    MultiIndex index; // J
    Face face;        // [0, e_{j_1}, ..., e_{j_k}]
    std::vector<std::string> killed;
};

struct InclinedFaceStep {
    MultiIndex index; // L
    int m = 0;
    Face face; // [e_m, e_{l_1}, ..., e_{l_k}]
    // Constant term of the pulled-back dt coefficient over the unknowns that
    // survive the first stage, as (label, coefficient) pairs.
    std::vector<std::pair<std::string, Rational>> constant_term;
    std::string killed;
};

struct ProofTrace {
    int n = 0;
    int k = 0;
    std::vector<CoordinateFaceStep> stage1;
    std::vector<InclinedFaceStep> stage2;
    bool complete = false;
};

// Replays the two-stage elimination showing that a form in the kernel
// vanishes. Throws TraceIncomplete if an unknown survives both stages.
ProofTrace proof_trace(int n, int k);

} // namespace whitneyforms
