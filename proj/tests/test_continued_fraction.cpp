#include <doctest.h>

#include "oracles.hpp"
#include "seifert/continued_fraction.hpp"
#include "seifert/error.hpp"

using namespace seifert;

namespace {

std::vector<long long> as_ll(const NegContinuedFraction& cf) {
    std::vector<long long> out;
    for (const auto& c : cf.entries()) out.push_back(c.get_si());
    return out;
}

NegContinuedFraction cf(std::initializer_list<long> entries) {
    std::vector<Integer> v;
    for (long e : entries) v.emplace_back(e);
    return NegContinuedFraction(v);
}

}  // namespace

TEST_CASE("expansion examples") {
    CHECK(neg_cf_expand(Rational::parse("-7/5")) == cf({-2, -2, -3}));
    CHECK(neg_cf_expand(Rational::parse("-4/3")) == cf({-2, -2, -2}));
    CHECK(neg_cf_expand(Rational::parse("-5/3")) == cf({-2, -3}));
    CHECK(neg_cf_expand(Rational(-1)) == cf({-1}));
    CHECK(neg_cf_expand(Rational(-4)) == cf({-4}));
    CHECK(neg_cf_expand(Rational::parse("-1/2")) == cf({-1, -2}));
}

TEST_CASE("stabilization counts") {
    auto counts = [](const NegContinuedFraction& c) {
        std::vector<long> out;
        for (const auto& s : stabilization_counts(c)) out.push_back(s.get_si());
        return out;
    };
    CHECK(counts(cf({-2, -2, -3})) == std::vector<long>{1, 0, 1});
    CHECK(counts(cf({-2, -2, -2})) == std::vector<long>{1, 0, 0});
    CHECK(counts(cf({-1})) == std::vector<long>{0});
    CHECK(counts(cf({-4})) == std::vector<long>{3});
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(neg_cf_expand(Rational(0)), Error);
    CHECK_THROWS_AS(neg_cf_expand(Rational::parse("3/2")), Error);
    try {
        neg_cf_expand(Rational(1));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonNegativeCoefficient);
    }
    CHECK_THROWS_AS(cf({}), Error);
    CHECK_THROWS_AS(cf({0}), Error);
    CHECK_THROWS_AS(cf({-2, -1}), Error);
    CHECK_THROWS_AS(cf({-3, 2}), Error);
}

TEST_CASE("expansion and evaluation round trip against the convergent oracle") {
    for (long q = 1; q <= 60; ++q) {
        for (long p = 1; p <= 60; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Rational r(Integer(-p), Integer(q));
            const auto e = neg_cf_expand(r);
            CHECK(neg_cf_value(e) == r);
            const auto o = oracle::cf_value(as_ll(e));
            CHECK(o.num() == -p);
            CHECK(o.den() == q);
            for (std::size_t i = 1; i < e.size(); ++i) CHECK(e.entries()[i] <= -2);
            CHECK(e.entries()[0] <= -1);
        }
    }
}

TEST_CASE("evaluation of random admissible sequences") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(1, 6), head(-5, -1), tail(-6, -2);
    for (int t = 0; t < 300; ++t) {
        std::vector<Integer> entries{Integer(head(rng))};
        const int m = len(rng);
        for (int i = 1; i < m; ++i) entries.emplace_back(tail(rng));
        const NegContinuedFraction c(entries);
        const auto o = oracle::cf_value(as_ll(c));
        const Rational v = neg_cf_value(c);
        CHECK(v.numerator() == o.num());
        CHECK(v.denominator() == o.den());
        CHECK(neg_cf_expand(v) == c);
    }
}
