#include "seifert/seifert_data.hpp"

#include "seifert/error.hpp"

namespace seifert {

Rational SeifertInvariants::euler() const {
    Rational e(n);
    for (const auto& p : pairs) e += Rational(p.beta, p.alpha);
    return e;
}

bool SeifertInvariants::is_normal_form() const {
    for (const auto& p : pairs) {
        if (!(p.alpha > p.beta && p.beta >= 1)) return false;
    }
    return true;
}

SeifertInvariants rolfsen_twist(const SeifertInvariants& inv, std::size_t index, int direction) {
    if (index >= inv.pairs.size()) throw Error(ErrorKind::InvalidArgument, "pair index out of range");
    if (direction != 1 && direction != -1) throw Error(ErrorKind::InvalidArgument, "direction must be +1 or -1");
    SeifertInvariants out = inv;
    auto& p = out.pairs[index];
    p.beta += direction * p.alpha;
    out.n -= direction;
    return out;
}

SeifertInvariants normalize(const SeifertInvariants& inv) {
    SeifertInvariants out;
    out.g = inv.g;
    out.n = inv.n;
    for (const auto& p : inv.pairs) {
        if (p.alpha <= 0) throw Error(ErrorKind::InvalidArgument, "alpha must be positive, got " + p.alpha.get_str());
        // beta = q*alpha + rest; q downward twists move q from beta into n.
        const Integer q = floor_div(p.beta, p.alpha);
        const Integer rest = p.beta - q * p.alpha;
        out.n += q;
        if (rest != 0) out.pairs.push_back({p.alpha, rest});
    }
    return out;
}

std::vector<Rational> coefficients_from_seifert(const SeifertInvariants& inv) {
    if (inv.g < 1) throw Error(ErrorKind::ConditionViolation, "need g >= 1");
    const Integer excess = inv.n - 2 * inv.g;
    if (excess < 0) throw Error(ErrorKind::ConditionViolation, "need n >= 2g, got n = " + inv.n.get_str());

    SeifertPair first{1, 0};
    if (!inv.pairs.empty()) first = inv.pairs.front();
    if (!(first.alpha > first.beta && first.beta >= 0))
        throw Error(ErrorKind::NonNormal, "first pair needs alpha > beta >= 0");
    for (std::size_t i = 1; i < inv.pairs.size(); ++i) {
        const auto& p = inv.pairs[i];
        if (!(p.alpha > p.beta && p.beta >= 1)) throw Error(ErrorKind::NonNormal, "pairs after the first need alpha > beta >= 1");
    }

    std::vector<Rational> rs;
    rs.emplace_back(Integer((excess + 1) * first.alpha + first.beta), Integer((excess + 2) * first.alpha + first.beta));
    for (std::size_t i = 1; i < inv.pairs.size(); ++i) {
        const auto& p = inv.pairs[i];
        rs.emplace_back(Integer(p.beta - p.alpha), p.beta);
    }
    return rs;
}

SeifertInvariants seifert_from_coefficients(long g, const std::vector<Rational>& rs) {
    if (g < 1) throw Error(ErrorKind::ConditionViolation, "need g >= 1");
    if (rs.empty()) throw Error(ErrorKind::ConditionViolation, "need at least one coefficient");
    const Rational& r1 = rs.front();
    if (r1 < Rational(1, 2) || r1 >= Rational(1))
        throw Error(ErrorKind::ConditionViolation, "need 1/2 <= r1 < 1, got " + r1.to_string());
    for (std::size_t i = 1; i < rs.size(); ++i) {
        if (rs[i].sign() >= 0) throw Error(ErrorKind::ConditionViolation, "need r_i < 0, got " + rs[i].to_string());
    }

    // r1 = p/q in lowest terms: alpha = q - p, p = (m+1) alpha + beta, 0 <= beta < alpha.
    const Integer p = r1.numerator();
    const Integer alpha = r1.denominator() - p;
    const Integer beta = mod_floor(p, alpha);
    const Integer m = floor_div(p, alpha) - 1;

    SeifertInvariants inv;
    inv.g = g;
    inv.n = m + 2 * g;
    if (beta != 0) inv.pairs.push_back({alpha, beta});
    for (std::size_t i = 1; i < rs.size(); ++i) {
        // r_i = -a/b  =>  beta_i = b, alpha_i = a + b.
        const Integer a = -rs[i].numerator();
        const Integer b = rs[i].denominator();
        inv.pairs.push_back({a + b, b});
    }
    return inv;
}

OrbifoldLineBundle canonical_bundle(const SeifertInvariants& inv) {
    OrbifoldLineBundle k;
    k.background = 2 * inv.g - 2;
    for (const auto& p : inv.pairs) k.local.push_back(p.alpha - 1);
    return k;
}

Rational degree(const OrbifoldLineBundle& bundle, const SeifertInvariants& inv) {
    if (bundle.local.size() != inv.pairs.size())
        throw Error(ErrorKind::LengthMismatch, "bundle has " + std::to_string(bundle.local.size()) +
                                                   " local invariants, manifold has " +
                                                   std::to_string(inv.pairs.size()) + " exceptional fibers");
    Rational deg(bundle.background);
    for (std::size_t i = 0; i < inv.pairs.size(); ++i) deg += Rational(bundle.local[i], inv.pairs[i].alpha);
    return deg;
}

std::optional<long> d_range(long g) {
    if (g < 1) return std::nullopt;
    for (long d = 1; d * (d + 1) <= 2 * g; ++d) {
        if (2 * g <= d * (d + 2) - 1) return d;
    }
    return std::nullopt;
}

}  // namespace seifert
