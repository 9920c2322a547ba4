#include "seifert/gauge.hpp"

#include "seifert/error.hpp"
#include "seifert/homology.hpp"

namespace seifert {

MoyVerdict moy_check(long g, const Integer& n, const Integer& alpha, const Integer& k) {
    if (g < 1) throw Error(ErrorKind::ConditionViolation, "need g >= 1");
    if (alpha < 1) throw Error(ErrorKind::ConditionViolation, "need alpha >= 1");
    if (n * alpha + 1 <= 0) throw Error(ErrorKind::ConditionViolation, "need n alpha + 1 > 0");

    MoyVerdict v;
    v.anchored = n >= 2 * g;
    v.canonical_degree = Rational(2 * g - 1) - Rational(Integer(1), alpha);
    v.period = Rational(n) + Rational(Integer(1), alpha);
    const Rational base(k, alpha);

    // base + j*period in [0, deg K]  <=>  j in [ceil(-base/P), floor((deg K - base)/P)].
    const Integer lo = (-base / v.period).ceil();
    const Integer hi = ((v.canonical_degree - base) / v.period).floor();
    const Rational half = v.canonical_degree / Rational(2);
    bool irreducible_candidate = false;
    for (Integer j = lo; j <= hi; ++j) {
        Rational d = base + Rational(j) * v.period;
        if (d != half) irreducible_candidate = true;
        v.witness_degrees.push_back(std::move(d));
    }
    v.reducibles_only = !irreducible_candidate;

    const Integer shift = (base / v.period).floor();
    v.representative = base - Rational(shift) * v.period;

    const bool half_in_coset = ((half - base) / v.period).is_integer();
    v.dirac_kernels_trivial = alpha % 2 == 0 || !half_in_coset;
    return v;
}

MoyVerdict moy_check(const FamilyParams& p) {
    const SpinCClass t = spinc_offset(p);
    return moy_check(p.g, p.n, p.alpha, t.offset);
}

Rational dedekind_s(const Integer& alpha) {
    return Rational(Integer(alpha * alpha + 2), Integer(12 * alpha)) - Rational(1, 4);
}

DedekindContext dedekind_context(const FamilyParams& p) {
    check_admissible(p);
    const Integer excess = p.n - 2 * p.g;
    DedekindContext c;
    c.l = Rational(p.n) + Rational(Integer(1), p.alpha);
    c.rho = Rational(Integer(p.alpha * (p.n - sign_value(p.sign) * excess) - p.r + 1),
                     Integer(2 * p.n * p.alpha + 2));
    if (c.rho.is_zero()) throw Error(ErrorKind::ConditionViolation, "rho vanishes, omega_red formula does not apply");
    c.gamma = Rational(Integer(p.r + p.alpha - 2), Integer(2));
    c.s = dedekind_s(p.alpha);
    c.f_rho = (c.gamma + c.rho) / Rational(p.alpha);
    const Rational a(p.alpha);
    const Rational& gm = c.gamma;
    c.s_rho = (a * a - Rational(3) * a * (Rational(1) + Rational(2) * gm) +
               Rational(2) * (Rational(1) + Rational(3) * gm + Rational(3) * gm * gm)) /
              (Rational(12) * a);
    return c;
}

Rational omega_red_long(const FamilyParams& p) {
    const DedekindContext c = dedekind_context(p);
    const Rational one(1);
    const Rational sign_l(c.l.sign());
    const Rational a(p.alpha);
    return Rational(Integer(2 * p.g - 1), Integer(2)) - (c.l - sign_l) / Rational(4) +
           c.l * c.rho * (one - c.rho) - c.rho + (one - a) / (Rational(2) * a) * (one - Rational(2) * c.rho) + c.s +
           c.f_rho + Rational(2) * c.s_rho;
}

Rational omega_red_closed(const FamilyParams& p) {
    check_admissible(p);
    const Integer excess = p.n - 2 * p.g;
    const Integer bracket =
        excess * excess * p.alpha - p.r * p.r * p.n + sign_value(p.sign) * 2 * excess * p.r;
    return -Rational(bracket, Integer(4 * family_modulus(p.n, p.alpha))) + Rational(Integer(2 * p.g - 1), Integer(2));
}

D3Invariant d3_contact(const FamilyParams& p) {
    return {Rational(2 * p.g - 1) - omega_red_closed(p), D3Kind::contact};
}

D3Invariant d3_canonical(const FamilyParams& p) { return {-omega_red_long(p) - Rational(2), D3Kind::canonical}; }

FillabilityReport fillability_verdict(const FamilyParams& p) {
    FillabilityReport f;
    f.tight = true;
    f.contact = d3_contact(p);
    f.canonical = d3_canonical(p);
    f.gap = f.contact.value - f.canonical.value;
    f.fillable = f.gap.is_zero();
    return f;
}

}  // namespace seifert
