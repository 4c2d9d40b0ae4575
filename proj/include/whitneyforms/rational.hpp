#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace whitneyforms {

// Exact fraction with arbitrary-precision numerator and denominator.
// Always stored in lowest terms with a positive denominator, so two
// Rationals compare equal iff they are the same number.
class Rational {
public:
    Rational() = default;
    Rational(long value) : m_value(value) {} // NOLINT: implicit by design of arithmetic types
    Rational(long numerator, long denominator);

    // Accepts "p", "-p", "p/q" with optional leading sign; q must be nonzero.
    static Rational parse(std::string_view text);

    static Rational factorial(int k);

    // "p/q", or "p" when q = 1.
    std::string to_string() const;
    double to_double() const { return m_value.get_d(); }

    bool is_zero() const { return sgn(m_value) == 0; }
    bool is_integer() const { return m_value.get_den() == 1; }
    int sign() const { return sgn(m_value); }

    std::string numerator() const { return m_value.get_num().get_str(); }
    std::string denominator() const { return m_value.get_den().get_str(); }

    Rational operator-() const;
    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.m_value, b.m_value) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
    explicit Rational(mpq_class value) : m_value(std::move(value)) {}

    mpq_class m_value;
};

} // namespace whitneyforms
