#pragma once

// Exact arithmetic primitives. Every scalar in the library is either an
// Integer (GMP mpz) or a Rational kept in lowest terms with a positive
// denominator. There is no floating point anywhere.

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seifert {

using Integer = mpz_class;

/// Floor division, rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);
/// Ceiling division.
Integer ceil_div(const Integer& a, const Integer& b);
/// Representative of a modulo m in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Converts to long, throwing std::overflow_error if the value does not fit.
long to_long(const Integer& v);

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "p", "p/q" or "-p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    Integer floor() const;
    Integer ceil() const;
    Rational abs() const;
    /// Throws std::domain_error for zero.
    Rational reciprocal() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace seifert
