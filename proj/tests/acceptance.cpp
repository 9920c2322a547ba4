// Acceptance suite A1-A10. Every check is exact; one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "seifert/continued_fraction.hpp"
#include "seifert/family.hpp"
#include "seifert/gauge.hpp"
#include "seifert/homology.hpp"
#include "seifert/lattice.hpp"
#include "seifert/legendrian.hpp"
#include "seifert/seifert_data.hpp"

using namespace seifert;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Calls f on every admissible (g, n, alpha, sign, r) of the A1/A2 grid.
void family_grid(const std::function<void(const FamilyParams&)>& f) {
    for (long g = 1; g <= 3; ++g)
        for (long n = 2 * g; n <= 2 * g + 4; ++n)
            for (long alpha = 1; alpha <= 15; ++alpha)
                for (Sign s : {Sign::plus, Sign::minus})
                    for (long r = -alpha; r <= alpha; r += 2) {
                        if ((s == Sign::plus && r == -alpha) || (s == Sign::minus && r == alpha)) continue;
                        f(FamilyParams{g, n, alpha, s, r});
                    }
}

std::string where(const FamilyParams& p) {
    std::ostringstream os;
    os << "(g=" << p.g << ", n=" << p.n << ", alpha=" << p.alpha << ", " << to_string(p.sign) << ", r=" << p.r
       << ")";
    return os.str();
}

Outcome a1() {
    long cases = 0;
    Outcome o;
    family_grid([&](const FamilyParams& p) {
        ++cases;
        if (o.pass && omega_red_long(p) != omega_red_closed(p)) {
            o.pass = false;
            o.detail = "mismatch at " + where(p);
        }
    });
    if (o.pass) o.detail = "omega_red long form = closed form on " + std::to_string(cases) + " cases";
    return o;
}

Outcome a2() {
    long cases = 0;
    Outcome o;
    family_grid([&](const FamilyParams& p) {
        ++cases;
        const Rational gap = d3_contact(p).value - d3_canonical(p).value;
        if (o.pass && gap != Rational(2 * p.g + 1)) {
            o.pass = false;
            o.detail = "gap " + gap.to_string() + " at " + where(p);
        }
    });
    if (o.pass) o.detail = "d3 gap = 2g+1 on " + std::to_string(cases) + " cases";
    return o;
}

Outcome a3() {
    Outcome o;
    long cases = 0;
    for (long g = 1; g <= 5 && o.pass; ++g) {
        for (long alpha = 1; alpha <= 50 && o.pass; ++alpha) {
            ++cases;
            const auto inv = family_manifold(g, 2 * g, alpha);
            const Integer expect = 2 * g * alpha + 1;
            const auto p = presentation(inv);
            oracle::Matrix m(p.matrix.rows(), std::vector<long long>(p.matrix.cols()));
            for (std::size_t i = 0; i < p.matrix.rows(); ++i)
                for (std::size_t j = 0; j < p.matrix.cols(); ++j) m[i][j] = p.matrix(i, j).get_si();
            const bool ok = mu_order(inv) == expect && homology(p).torsion == std::vector<Integer>{expect} &&
                            Integer(oracle::generator_order(m, *p.mu_index)) == expect;
            if (!ok) {
                o.pass = false;
                o.detail = "g=" + std::to_string(g) + " alpha=" + std::to_string(alpha);
            }
        }
    }
    if (o.pass) o.detail = "order of mu = 2g alpha + 1 (SNF and adjugate oracle) on " + std::to_string(cases) + " cases";
    return o;
}

Outcome a4() {
    Outcome o;
    long cases = 0;
    for (long g = 1; g <= 3 && o.pass; ++g) {
        for (long alpha = 1; alpha <= 15 && o.pass; ++alpha) {
            for (long r = -alpha; r <= alpha && o.pass; r += 2) {
                ++cases;
                // r = -alpha is reached only by the minus sign; the offsets agree at n = 2g.
                const Sign s = r == -alpha ? Sign::minus : Sign::plus;
                const FamilyParams p{g, 2 * g, alpha, s, r};
                const auto v = moy_check(p);
                const auto k = spinc_offset(p).offset;
                const auto brute = oracle::moy(g, 2 * g, alpha, k.get_si());
                const Rational upper = Rational(2 * g) + Rational(Integer(1), Integer(alpha));
                const bool ok = v.reducibles_only && v.dirac_kernels_trivial && brute.reducibles_only &&
                                brute.kernels_trivial && v.canonical_degree < v.representative &&
                                v.representative < upper;
                if (!ok) {
                    o.pass = false;
                    o.detail = "failure at " + where(p);
                }
            }
        }
    }
    if (o.pass) o.detail = "(reducibles only, kernels trivial) and sandwich on " + std::to_string(cases) + " cases";
    return o;
}

Outcome a5() {
    Outcome o;
    for (long alpha = 1; alpha <= 20 && o.pass; ++alpha) {
        const auto d = convert(Rational(Integer(alpha + 1), Integer(2 * alpha + 1)));
        bool ok = d.components.size() == 3 && d.plus_count == 2;
        if (ok) {
            ok = d.components[0].contact_coefficient == Rational(1) && d.components[0].stab_count == 0 &&
                 d.components[1].contact_coefficient == Rational(1) && d.components[1].stab_count == 0 &&
                 d.components[2].contact_coefficient == Rational(-1) && d.components[2].stab_count == alpha;
        }
        ok = ok && choice_count(d) == alpha + 1 && enumerate_choices(d).size() == static_cast<std::size_t>(alpha + 1);
        if (!ok) {
            o.pass = false;
            o.detail = "alpha=" + std::to_string(alpha);
        }
    }
    if (o.pass) o.detail = "(+1), (+1), (-1) stabilized alpha times with alpha+1 choices for alpha = 1..20";
    return o;
}

Outcome a6() {
    Outcome o;
    long cases = 0;
    for (long n = 3; n <= 5 && o.pass; ++n) {
        for (long alpha = 1; alpha <= 6 && o.pass; ++alpha) {
            ++cases;
            const auto d = convert(family_coefficient(1, n, alpha));
            const std::size_t first_chain = d.plus_count;
            std::multiset<long> plus, minus;
            bool ok = first_chain < d.components.size() && d.components[first_chain].stab_count == 1;
            if (ok) {
                for (const auto& c : enumerate_choices(d)) {
                    const long rot = c.rotation.get_si();
                    (c.signs[first_chain].first == 1 ? plus : minus).insert(rot);
                }
            }
            std::multiset<long> want_plus, want_minus;
            for (long r = -alpha; r <= alpha; r += 2) {
                if (r > -alpha) want_plus.insert(r);
                if (r < alpha) want_minus.insert(r);
            }
            ok = ok && plus == want_plus && minus == want_minus && plus.size() == static_cast<std::size_t>(alpha) &&
                 minus.size() == static_cast<std::size_t>(alpha);
            if (!ok) {
                o.pass = false;
                o.detail = "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha);
            }
        }
    }
    if (o.pass) o.detail = "final rotations split into xi+ on (-alpha, alpha] and xi- on [-alpha, alpha) on " +
                           std::to_string(cases) + " cases";
    return o;
}

Outcome a7() {
    Outcome o;
    std::ostringstream os;
    for (const GramMatrix& g : {GramMatrix{{-1}}, GramMatrix{{-2}}, GramMatrix{{-2, 1}, {1, -2}}}) {
        const auto e = embeds_in_diagonal(Lattice{g});
        if (!e || !verify_embedding(g, *e)) {
            o.pass = false;
            os << "small lattice of rank " << g.size() << " not embedded; ";
        }
    }
    const auto start = std::chrono::steady_clock::now();
    const auto s = search_diagonal_embedding(lambda_q(3));
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (s.embedding) {
        o.pass = false;
        os << "Lambda_3 embedding found; ";
    }
    const auto report = nonfillability_obstruction(1);
    if (report.d != 1 || !report.obstruction_holds) {
        o.pass = false;
        os << "g = 1 obstruction not certified; ";
    }
    if (o.pass) {
        os << "(-1), (-2), A2 embed; Lambda_3 embeds in no D_m (" << s.nodes << " nodes, m <= " << s.column_bound
           << ", " << ms << " ms); g = 1 obstruction certified";
    }
    o.detail = os.str();
    return o;
}

Outcome a8() {
    Outcome o;
    const auto w = distinct_witness(1, 2);
    bool ok = w.alpha == 7 && w.rotations == std::vector<Integer>{3, 5} && w.orders == std::vector<Integer>{5, 3};
    std::set<Integer> orders;
    for (std::size_t i = 0; i < w.rotations.size(); ++i) {
        const auto c = c1_class(family_manifold(1, 2, w.alpha), w.rotations[i]);
        ok = ok && c.c1_order == w.orders[i];
        orders.insert(c.c1_order);
    }
    ok = ok && orders.size() == w.rotations.size();
    o.pass = ok;
    o.detail = ok ? "alpha = 7, rotations (3, 5), c1 orders (5, 3) confirmed by c1_class" : "unexpected witness";
    return o;
}

Outcome a9() {
    Outcome o;
    long cases = 0;
    for (long q = 1; q <= 200 && o.pass; ++q) {
        for (long p = 1; p <= 200; ++p) {
            if (std::gcd(p, q) != 1) continue;
            ++cases;
            const Rational r(Integer(-p), Integer(q));
            if (neg_cf_value(neg_cf_expand(r)) != r) {
                o.pass = false;
                o.detail = "round trip fails at " + r.to_string();
                break;
            }
        }
    }
    if (o.pass) o.detail = "value(expand(r)) = r for " + std::to_string(cases) + " reduced fractions";
    return o;
}

Outcome a10() {
    Outcome o;
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<long> g_d(1, 3), excess_d(0, 4), alpha_d(2, 20), k_d(1, 4), twist_d(-3, 3);
    for (int t = 0; t < 1000 && o.pass; ++t) {
        SeifertInvariants inv;
        inv.g = g_d(rng);
        inv.n = 2 * inv.g + excess_d(rng);
        const long k = k_d(rng);
        for (long i = 0; i < k; ++i) {
            const long a = alpha_d(rng);
            std::uniform_int_distribution<long> b_d(1, a - 1);
            long b = b_d(rng);
            while (std::gcd(a, b) != 1) b = b_d(rng);
            inv.pairs.push_back({a, b});
        }
        SeifertInvariants scrambled = inv;
        for (std::size_t i = 0; i < scrambled.pairs.size(); ++i) {
            const long twists = twist_d(rng);
            for (long j = 0; j < (twists < 0 ? -twists : twists); ++j)
                scrambled = rolfsen_twist(scrambled, i, twists > 0 ? 1 : -1);
        }
        const bool ok = scrambled.euler() == inv.euler() && normalize(scrambled) == inv &&
                        normalize(scrambled).euler() == inv.euler() &&
                        seifert_from_coefficients(inv.g, coefficients_from_seifert(inv)) == inv;
        if (!ok) {
            o.pass = false;
            o.detail = "failure at sample " + std::to_string(t);
        }
    }
    if (o.pass) o.detail = "e preserved and coefficient round trip exact on 1000 random normal-form inputs";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
        {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%-4s %s  %s\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
