#include <doctest.h>

#include "oracles.hpp"
#include "seifert/error.hpp"
#include "seifert/seifert_data.hpp"

using namespace seifert;

namespace {

SeifertInvariants M(long g, long n, std::vector<std::pair<long, long>> pairs = {}) {
    SeifertInvariants inv;
    inv.g = g;
    inv.n = n;
    for (auto [a, b] : pairs) inv.pairs.push_back({a, b});
    return inv;
}

bool same_euler(const SeifertInvariants& inv, const oracle::Frac& e) {
    const Rational r = inv.euler();
    return r.numerator() == e.num() && r.denominator() == e.den();
}

std::vector<std::pair<long long, long long>> raw(const SeifertInvariants& inv) {
    std::vector<std::pair<long long, long long>> out;
    for (const auto& p : inv.pairs) out.emplace_back(p.alpha.get_si(), p.beta.get_si());
    return out;
}

}  // namespace

TEST_CASE("rolfsen twists") {
    CHECK(rolfsen_twist(M(1, 3, {{2, -1}}), 0, +1) == M(1, 2, {{2, 1}}));
    CHECK(rolfsen_twist(M(1, 2, {{3, 1}}), 0, -1) == M(1, 3, {{3, -2}}));
    const auto inv = M(2, 5, {{5, 2}, {3, 1}});
    CHECK(rolfsen_twist(rolfsen_twist(inv, 1, +1), 1, -1) == inv);
    CHECK(rolfsen_twist(inv, 0, +1).euler() == inv.euler());
    CHECK_THROWS_AS(rolfsen_twist(inv, 2, +1), Error);
}

TEST_CASE("normalize examples") {
    CHECK(normalize(M(1, 3, {{2, -1}})) == M(1, 2, {{2, 1}}));
    CHECK(normalize(M(1, 2, {{3, 1}})) == M(1, 2, {{3, 1}}));
    CHECK(normalize(M(1, 5, {{4, 9}})) == M(1, 7, {{4, 1}}));
    CHECK(normalize(M(1, 2, {{3, 6}})) == M(1, 4));
    CHECK(normalize(M(1, 2, {{1, 1}})) == M(1, 3));
    CHECK_THROWS_AS(normalize(M(1, 2, {{0, 1}})), Error);
    CHECK_THROWS_AS(normalize(M(1, 2, {{-3, 1}})), Error);
}

TEST_CASE("normalize preserves e on random input") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> alpha(1, 15), beta(-60, 60), n(-10, 10), k(0, 4);
    for (int t = 0; t < 1000; ++t) {
        auto inv = M(1, n(rng));
        const long m = k(rng);
        for (long i = 0; i < m; ++i) inv.pairs.push_back({alpha(rng), beta(rng)});
        const auto e = oracle::euler(inv.n.get_si(), raw(inv));
        const auto out = normalize(inv);
        CHECK(same_euler(inv, e));
        CHECK(same_euler(out, e));
        CHECK(out.is_normal_form());
        CHECK(normalize(out) == out);
    }
}

TEST_CASE("coefficient dictionary examples") {
    CHECK(coefficients_from_seifert(M(1, 2, {{3, 1}})) == std::vector<Rational>{Rational::parse("4/7")});
    CHECK(coefficients_from_seifert(M(1, 3, {{2, 1}})) == std::vector<Rational>{Rational::parse("5/7")});
    CHECK(coefficients_from_seifert(M(1, 2, {{3, 1}, {5, 2}})) ==
          std::vector<Rational>{Rational::parse("4/7"), Rational::parse("-3/2")});
    CHECK(coefficients_from_seifert(M(1, 2)) == std::vector<Rational>{Rational::parse("1/2")});
    CHECK_THROWS_AS(coefficients_from_seifert(M(1, 1, {{3, 1}})), Error);
    CHECK_THROWS_AS(coefficients_from_seifert(M(0, 2, {{3, 1}})), Error);

    CHECK(seifert_from_coefficients(1, {Rational::parse("4/7")}) == M(1, 2, {{3, 1}}));
    CHECK(seifert_from_coefficients(1, {Rational::parse("1/2")}) == M(1, 2));
    CHECK(seifert_from_coefficients(2, {Rational::parse("5/7")}) == M(2, 5, {{2, 1}}));
    CHECK_THROWS_AS(seifert_from_coefficients(1, {Rational::parse("1/3")}), Error);
    CHECK_THROWS_AS(seifert_from_coefficients(1, {Rational(1)}), Error);
    CHECK_THROWS_AS(seifert_from_coefficients(1, {Rational::parse("2/3"), Rational(1)}), Error);
    CHECK_THROWS_AS(seifert_from_coefficients(0, {Rational::parse("2/3")}), Error);
}

TEST_CASE("coefficient dictionary: range and round trip") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> g(1, 3), excess(0, 4), alpha(2, 20), k(1, 4);
    int tested = 0;
    while (tested < 1000) {
        auto inv = M(g(rng), 0);
        inv.n = 2 * inv.g + excess(rng);
        const long m = k(rng);
        for (long i = 0; i < m; ++i) {
            const long a = alpha(rng);
            std::uniform_int_distribution<long> b(1, a - 1);
            long bb = b(rng);
            while (std::gcd(a, bb) != 1) bb = b(rng);
            inv.pairs.push_back({a, bb});
        }
        const auto rs = coefficients_from_seifert(inv);
        REQUIRE(rs.size() == inv.pairs.size());
        CHECK(rs[0] >= Rational::parse("1/2"));
        CHECK(rs[0] < Rational(1));
        for (std::size_t i = 1; i < rs.size(); ++i) CHECK(rs[i].sign() < 0);
        // Forward formula recomputed with the fraction oracle.
        const long long excess_n = inv.n.get_si() - 2 * inv.g;
        const long long a1 = inv.pairs[0].alpha.get_si(), b1 = inv.pairs[0].beta.get_si();
        const oracle::Frac r1((excess_n + 1) * a1 + b1, (excess_n + 2) * a1 + b1);
        CHECK(rs[0].numerator() == r1.num());
        CHECK(rs[0].denominator() == r1.den());
        CHECK(seifert_from_coefficients(inv.g, rs) == normalize(inv));
        ++tested;
    }
}

TEST_CASE("canonical bundle and degree") {
    const auto a = M(1, 2, {{3, 1}});
    CHECK(canonical_bundle(a) == OrbifoldLineBundle{0, {2}});
    CHECK(degree(canonical_bundle(a), a) == Rational::parse("2/3"));
    const auto b = M(1, 2, {{1, 1}});
    CHECK(degree(canonical_bundle(b), b) == Rational(0));
    const auto c = M(2, 4, {{5, 1}});
    CHECK(canonical_bundle(c) == OrbifoldLineBundle{2, {4}});
    CHECK(degree(canonical_bundle(c), c) == Rational::parse("14/5"));
    CHECK(degree(OrbifoldLineBundle{0, {0}}, c) == Rational(0));
    CHECK_THROWS_AS(degree(OrbifoldLineBundle{0, {}}, c), Error);

    for (long g = 1; g <= 3; ++g) {
        const auto inv = M(g, 2 * g, {{3, 1}, {5, 2}, {7, 3}});
        oracle::Frac expect(2 * g - 2);
        for (long a : {3, 5, 7}) expect = expect + oracle::Frac(a - 1, a);
        const Rational d = degree(canonical_bundle(inv), inv);
        CHECK(d.numerator() == expect.num());
        CHECK(d.denominator() == expect.den());
    }
}

TEST_CASE("d_range against a scan") {
    CHECK(d_range(1) == 1);
    CHECK_FALSE(d_range(2).has_value());
    CHECK(d_range(3) == 2);
    for (long g = 1; g <= 200; ++g) {
        std::optional<long> expect;
        for (long d = 1; d * (d + 1) <= 2 * g; ++d)
            if (2 * g <= d * (d + 2) - 1) expect = d;
        CHECK(d_range(g) == expect);
    }
}
