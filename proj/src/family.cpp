#include "seifert/family.hpp"

#include "seifert/error.hpp"

namespace seifert {

void check_admissible(const FamilyParams& p) {
    if (p.g < 1) throw Error(ErrorKind::ConditionViolation, "need g >= 1");
    if (p.alpha < 1) throw Error(ErrorKind::ConditionViolation, "need alpha >= 1");
    if (p.n < 2 * p.g) throw Error(ErrorKind::ConditionViolation, "need n >= 2g, got n = " + p.n.get_str());
    if (mod_floor(p.r - p.alpha, 2) != 0)
        throw Error(ErrorKind::ParityViolation, "rotation " + p.r.get_str() + " must have the parity of alpha = " +
                                                    p.alpha.get_str());
    const bool ok = p.sign == Sign::plus ? (-p.alpha < p.r && p.r <= p.alpha) : (-p.alpha <= p.r && p.r < p.alpha);
    if (!ok) {
        const std::string range = p.sign == Sign::plus ? "-alpha < r <= alpha" : "-alpha <= r < alpha";
        throw Error(ErrorKind::RangeViolation,
                    "rotation " + p.r.get_str() + " outside " + range + " (alpha = " + p.alpha.get_str() + ")");
    }
}

Integer family_modulus(const Integer& n, const Integer& alpha) { return n * alpha + 1; }

SeifertInvariants family_manifold(long g, const Integer& n, const Integer& alpha) {
    SeifertInvariants inv;
    inv.g = g;
    inv.n = n;
    inv.pairs.push_back({alpha, 1});
    return inv;
}

Rational family_coefficient(long g, const Integer& n, const Integer& alpha) {
    const Integer excess = n - 2 * g;
    return Rational(Integer((excess + 1) * alpha + 1), Integer((excess + 2) * alpha + 1));
}

}  // namespace seifert
