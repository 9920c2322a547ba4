#include "seifert/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace seifert {

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    if (m == 0) throw std::domain_error("modulus is zero");
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

long to_long(const Integer& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + v.get_str());
    return v.get_si();
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::string str(s);
        if (str.empty()) throw std::invalid_argument("empty number in '" + std::string(text) + "'");
        std::size_t start = (str[0] == '-' || str[0] == '+') ? 1 : 0;
        if (start == str.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < str.size(); ++i) {
            if (str[i] < '0' || str[i] > '9')
                throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        if (str[0] == '+') str.erase(0, 1);
        return Integer(str);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

Integer Rational::floor() const { return floor_div(numerator(), denominator()); }

Integer Rational::ceil() const { return ceil_div(numerator(), denominator()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(denominator(), numerator());
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace seifert
