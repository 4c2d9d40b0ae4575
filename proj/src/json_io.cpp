#include <whitneyforms/json_io.hpp>
#include <whitneyforms/errors.hpp>

#include <algorithm>

namespace whitneyforms {

namespace {

const Json &require(const Json &j, const char *key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

int require_int(const Json &j, const char *key) {
    const Json &v = require(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> int_list(const Json &j, const char *what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto &e : j) {
        if (!e.is_number_integer()) throw ParseError(std::string(what) + " must be an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

// Wraps domain validation errors raised while reading input.
template <typename F>
auto as_parse_error(F &&f) {
    try {
        return f();
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(e.what());
    }
}

} // namespace

Json rational_to_json(const Rational &r) { return r.to_string(); }

Rational rational_from_json(const Json &j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational must be a string \"p/q\" or an integer");
}

Json cochain_to_json(const Cochain &c) {
    Json terms = Json::array();
    for (const auto &[verts, coeff] : c.terms()) terms.push_back({{"face", verts}, {"coeff", rational_to_json(coeff)}});
    return {{"n", c.ambient_dim()}, {"k", c.degree()}, {"terms", terms}};
}

Cochain cochain_from_json(const Json &j) {
    return as_parse_error([&] {
        const int n = require_int(j, "n");
        const int k = require_int(j, "k");
        Cochain c(n, k);
        const Json &terms = require(j, "terms");
        if (!terms.is_array()) throw ParseError("'terms' must be an array");
        for (const auto &term : terms) {
            Face face(n, int_list(require(term, "face"), "'face'"));
            if (face.degree() != k) throw ParseError("face degree does not match k");
            c.add(face, rational_from_json(require(term, "coeff")));
        }
        return c;
    });
}

Json form_to_json(const AffineForm &w) {
    Json terms = Json::array();
    for (const auto &[index, coeff] : w.terms()) {
        Json grad = Json::array();
        for (const auto &a : coeff.gradient()) grad.push_back(rational_to_json(a));
        terms.push_back({{"dx", index.indices()}, {"const", rational_to_json(coeff.constant())}, {"grad", grad}});
    }
    return {{"n", w.ambient_dim()}, {"k", w.degree()}, {"terms", terms}};
}

AffineForm form_from_json(const Json &j) {
    return as_parse_error([&] {
        const int n = require_int(j, "n");
        const int k = require_int(j, "k");
        AffineForm w(n, k);
        const Json &terms = require(j, "terms");
        if (!terms.is_array()) throw ParseError("'terms' must be an array");
        for (const auto &term : terms) {
            std::vector<int> dx = int_list(require(term, "dx"), "'dx'");
            if (static_cast<int>(dx.size()) != k) throw ParseError("'dx' length does not match k");
            for (int i : dx)
                if (i < 1 || i > n) throw ParseError("'dx' index outside [1, n]");
            const int sign = permutation_sign(dx);
            std::sort(dx.begin(), dx.end());
            if (std::adjacent_find(dx.begin(), dx.end()) != dx.end()) throw ParseError("repeated index in 'dx'");

            Rational constant = term.contains("const") ? rational_from_json(term["const"]) : Rational(0);
            Vector grad(static_cast<std::size_t>(n));
            if (term.contains("grad")) {
                const Json &g = term["grad"];
                if (!g.is_array() || static_cast<int>(g.size()) != n) throw ParseError("'grad' must list n rationals");
                for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = rational_from_json(g[i]);
            }
            AffineFunction coeff(std::move(constant), std::move(grad));
            w.add_term(MultiIndex(std::move(dx)), sign == 1 ? coeff : -coeff);
        }
        return w;
    });
}

Json trace_to_json(const ProofTrace &trace) {
    Json stage1 = Json::array();
    for (const auto &step : trace.stage1)
        stage1.push_back({{"J", step.index.indices()}, {"face", step.face.vertices()}, {"killed", step.killed}});

    Json stage2 = Json::array();
    for (const auto &step : trace.stage2) {
        Json constant = Json::object();
        for (const auto &[label, coeff] : step.constant_term) constant[label] = rational_to_json(coeff);
        stage2.push_back({{"L", step.index.indices()},
                          {"m", step.m},
                          {"face", step.face.vertices()},
                          {"constant_term", constant},
                          {"killed", step.killed}});
    }
    return {{"n", trace.n}, {"k", trace.k}, {"stage1", stage1}, {"stage2", stage2}, {"complete", trace.complete}};
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace whitneyforms
