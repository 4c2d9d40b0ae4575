#include <whitneyforms/rational.hpp>
#include <whitneyforms/errors.hpp>

#include <cctype>
#include <ostream>

namespace whitneyforms {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw ParseError("malformed rational: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("Rational with zero denominator");
    m_value = mpq_class(numerator, denominator);
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    mpq_class value;
    if (slash == std::string_view::npos) {
        value = mpq_class(parse_integer(text));
    } else {
        mpz_class num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
            throw ParseError("malformed rational: '" + std::string(text) + "'");
        mpz_class den = parse_integer(den_text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = mpq_class(num, den);
        value.canonicalize();
    }
    return Rational(std::move(value));
}

Rational Rational::factorial(int k) {
    if (k < 0) throw std::domain_error("factorial of a negative number");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(mpq_class(f));
}

std::string Rational::to_string() const {
    if (m_value.get_den() == 1) return m_value.get_num().get_str();
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-m_value)); }

Rational &Rational::operator+=(const Rational &rhs) {
    m_value += rhs.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
    m_value -= rhs.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
    m_value *= rhs.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational division by zero");
    m_value /= rhs.m_value;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

} // namespace whitneyforms
