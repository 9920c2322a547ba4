#pragma once

// The single-fiber family M(g, n; (alpha, 1)), n >= 2g, with contact
// structures xi^+_r and xi^-_r indexed by the rotation r of the last
// Legendrian component:
//   sign +: -alpha <  r <= alpha
//   sign -: -alpha <= r <  alpha
// and r = alpha (mod 2) in both cases.

#include <string_view>

#include "seifert/rational.hpp"
#include "seifert/seifert_data.hpp"

namespace seifert {

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
inline std::string_view to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

struct FamilyParams {
    long g = 1;
    Integer n;
    Integer alpha;
    Sign sign = Sign::plus;
    Integer r;
};

/// Throws Error(ConditionViolation) unless g >= 1, alpha >= 1, n >= 2g;
/// Error(ParityViolation) unless r = alpha (mod 2); Error(RangeViolation)
/// when r is outside the range of its sign.
void check_admissible(const FamilyParams& p);

/// n*alpha + 1, the order of the torsion of H1(M(g, n; (alpha, 1))).
Integer family_modulus(const Integer& n, const Integer& alpha);

/// M(g, n; (alpha, 1)).
SeifertInvariants family_manifold(long g, const Integer& n, const Integer& alpha);

/// First contact coefficient ((n-2g+1)alpha + 1) / ((n-2g+2)alpha + 1).
Rational family_coefficient(long g, const Integer& n, const Integer& alpha);

}  // namespace seifert
