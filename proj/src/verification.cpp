#include <whitneyforms/verification.hpp>

#include <whitneyforms/characterize.hpp>
#include <whitneyforms/derham.hpp>
#include <whitneyforms/errors.hpp>
#include <whitneyforms/sampling.hpp>
#include <whitneyforms/whitney.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <set>

namespace whitneyforms {

namespace {

// Runs `body`, which returns a counterexample (null when the check holds).
CheckResult run_check(std::string name, const std::function<Json()> &body) {
    CheckResult result;
    result.name = std::move(name);
    try {
        result.counterexample = body();
        result.passed = result.counterexample.is_null();
        if (!result.passed && result.counterexample.contains("reason"))
            result.detail = result.counterexample["reason"].get<std::string>();
    } catch (const std::exception &e) {
        result.passed = false;
        result.detail = e.what();
        result.counterexample = {{"reason", e.what()}};
    }
    return result;
}

CheckResult not_applicable(std::string name) {
    CheckResult result;
    result.name = std::move(name);
    result.applicable = false;
    return result;
}

std::vector<Cochain> test_cochains(int n, int k, const VerifyOptions &options) {
    std::vector<Cochain> out;
    for (const auto &face : enumerate_faces(n, k)) out.push_back(Cochain::basis(face));
    auto rng = cell_rng(options.seed, n, k);
    for (int s = 0; s < options.samples; ++s) out.push_back(random_cochain(n, k, rng));
    return out;
}

} // namespace

bool CellReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.applicable || c.passed; });
}

CellReport verify_cell(int n, int k, const VerifyOptions &options) {
    CellReport report;
    report.n = n;
    report.k = k;
    const auto faces = enumerate_faces(n, k);
    const auto cochains = test_cochains(n, k, options);

    report.checks.push_back(run_check("dimension", [&]() -> Json {
        const auto computed = lambda_e_dimension(n, k);
        const auto expected = static_cast<std::size_t>(binomial(n + 1, k + 1));
        if (computed == expected) return nullptr;
        return {{"reason", "dimension mismatch"}, {"computed", computed}, {"expected", expected}};
    }));

    report.checks.push_back(run_check("constant_pullback", [&]() -> Json {
        for (const auto &tau : faces) {
            const AffineForm w = whitney_basis_form(tau);
            for (const auto &target : faces)
                if (!is_constant(pullback(w, target)))
                    return {{"reason", "non-constant pullback"},
                            {"form_face", tau.vertices()},
                            {"target_face", target.vertices()},
                            {"pullback", form_to_json(pullback(w, target))}};
        }
        return nullptr;
    }));

    report.checks.push_back(run_check("derham_roundtrip", [&]() -> Json {
        for (const auto &c : cochains) {
            const Cochain back = derham(whitney(c));
            if (back != c)
                return {{"reason", "R(W(c)) != c"}, {"cochain", cochain_to_json(c)}, {"got", cochain_to_json(back)}};
        }
        return nullptr;
    }));

    report.checks.push_back(run_check("characterization", [&]() -> Json {
        for (const auto &c : cochains) {
            const AffineForm expected = whitney(c);
            const AffineForm got = solve_characterization(n, k, c);
            if (got != expected)
                return {{"reason", "characterization differs from W(c)"},
                        {"cochain", cochain_to_json(c)},
                        {"expected", form_to_json(expected)},
                        {"got", form_to_json(got)}};
            if (k == 0 || k == n) {
                const AffineForm linear = solve_characterization_linear(n, k, c);
                if (linear != expected)
                    return {{"reason", "linear-system path differs from closed form"},
                            {"cochain", cochain_to_json(c)},
                            {"expected", form_to_json(expected)},
                            {"got", form_to_json(linear)}};
            }
        }
        return nullptr;
    }));

    if (k >= 1) {
        report.checks.push_back(run_check("kernel_trivial", [&]() -> Json {
            const KernelCertificate cert = kernel_is_trivial(n, k);
            if (cert.trivial) return nullptr;
            Json basis = Json::array();
            for (const auto &v : cert.basis) {
                Json vec = Json::array();
                for (const auto &x : v) vec.push_back(rational_to_json(x));
                basis.push_back(vec);
            }
            return {{"reason", "nontrivial kernel"}, {"basis", basis}};
        }));
    } else {
        report.checks.push_back(not_applicable("kernel_trivial"));
    }

    if (k >= 1 && k <= n - 1) {
        report.checks.push_back(run_check("proof_trace", [&]() -> Json {
            const ProofTrace trace = proof_trace(n, k);
            std::multiset<std::string> killed;
            for (const auto &step : trace.stage1) killed.insert(step.killed.begin(), step.killed.end());
            for (const auto &step : trace.stage2) killed.insert(step.killed);
            std::multiset<std::string> expected;
            const UnknownLayout layout(n, k);
            for (const auto &u : layout.unknowns()) expected.insert(u.label());
            if (trace.complete && killed == expected) return nullptr;
            return {{"reason", "kill set differs from unknown set"}, {"trace", trace_to_json(trace)}};
        }));
    } else {
        report.checks.push_back(not_applicable("proof_trace"));
    }
    return report;
}

std::vector<CellReport> verify_range(int n_max, int k, const VerifyOptions &options) {
    std::vector<std::future<CellReport>> pending;
    for (int n = 1; n <= n_max; ++n) {
        for (int kk = 0; kk <= n; ++kk) {
            if (k >= 0 && kk != k) continue;
            pending.push_back(std::async(std::launch::async, [n, kk, &options] { return verify_cell(n, kk, options); }));
        }
    }
    std::vector<CellReport> reports;
    for (auto &f : pending) reports.push_back(f.get());
    return reports;
}

Json report_to_json(const CellReport &report) {
    Json checks = Json::object();
    for (const auto &c : report.checks) {
        if (!c.applicable) checks[c.name] = "n/a";
        else checks[c.name] = c.passed ? "pass" : "fail";
    }
    Json out = {{"n", report.n}, {"k", report.k}, {"checks", checks}, {"passed", report.passed()}};
    for (const auto &c : report.checks)
        if (c.applicable && !c.passed) {
            out["counterexample"] = c.counterexample;
            out["failed_check"] = c.name;
            break;
        }
    return out;
}

} // namespace whitneyforms
