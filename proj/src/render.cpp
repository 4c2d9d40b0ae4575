#include <whitneyforms/render.hpp>

#include <algorithm>
#include <tuple>
#include <vector>

namespace whitneyforms {

namespace {

struct Monomial {
    int variable; // 0 for the constant part
    MultiIndex index;
    Rational coeff;
};

std::vector<Monomial> expand(const AffineForm &w) {
    std::vector<Monomial> out;
    for (const auto &[index, f] : w.terms()) {
        if (!f.constant().is_zero()) out.push_back({0, index, f.constant()});
        for (std::size_t j = 0; j < f.gradient().size(); ++j)
            if (!f.gradient()[j].is_zero()) out.push_back({static_cast<int>(j) + 1, index, f.gradient()[j]});
    }
    std::sort(out.begin(), out.end(), [](const Monomial &a, const Monomial &b) {
        return std::tie(a.variable, a.index) < std::tie(b.variable, b.index);
    });
    return out;
}

struct Style {
    std::string (*variable)(int);
    std::string (*differential)(const MultiIndex &);
    std::string (*number)(const Rational &); // nonnegative
    std::string factor_separator;
};

std::string join_terms(const std::vector<Monomial> &terms, const Style &style) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &term : terms) {
        const bool negative = term.coeff.sign() < 0;
        const Rational magnitude = negative ? -term.coeff : term.coeff;

        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;

        std::vector<std::string> factors;
        if (term.variable > 0) factors.push_back(style.variable(term.variable));
        if (term.index.size() > 0) factors.push_back(style.differential(term.index));
        if (magnitude != Rational(1) || factors.empty()) factors.insert(factors.begin(), style.number(magnitude));

        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) out += style.factor_separator;
            out += factors[i];
        }
    }
    return out;
}

std::string text_variable(int j) { return "x" + std::to_string(j); }

std::string text_differential(const MultiIndex &index) {
    std::string out;
    for (std::size_t i = 0; i < index.indices().size(); ++i) {
        if (i > 0) out += "^";
        out += "dx" + std::to_string(index.indices()[i]);
    }
    return out;
}

std::string text_number(const Rational &r) { return r.to_string(); }

std::string latex_variable(int j) { return "x^{" + std::to_string(j) + "}"; }

std::string latex_differential(const MultiIndex &index) {
    std::string out;
    for (std::size_t i = 0; i < index.indices().size(); ++i) {
        if (i > 0) out += " \\wedge ";
        out += "dx^{" + std::to_string(index.indices()[i]) + "}";
    }
    return out;
}

std::string latex_number(const Rational &r) {
    if (r.is_integer()) return r.numerator();
    return "\\frac{" + r.numerator() + "}{" + r.denominator() + "}";
}

} // namespace

std::string to_text(const AffineForm &w) {
    static const Style style{text_variable, text_differential, text_number, " "};
    return join_terms(expand(w), style);
}

std::string to_latex(const AffineForm &w) {
    static const Style style{latex_variable, latex_differential, latex_number, " \\, "};
    return join_terms(expand(w), style);
}

std::string to_text(const Cochain &c) {
    if (c.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[verts, coeff] : c.terms()) {
        const bool negative = coeff.sign() < 0;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        const Rational magnitude = negative ? -coeff : coeff;
        if (magnitude != Rational(1)) out += magnitude.to_string() + " ";
        out += "[";
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(verts[i]);
        }
        out += "]";
    }
    return out;
}

} // namespace whitneyforms
