#pragma once

// Seiberg-Witten side of the non-fillability argument on M(g, n; (alpha, 1)):
// the reducibility and Dirac-kernel criteria on orbifold degrees, the
// Dedekind-sum expression for omega_red, and the two d3 invariants whose
// difference rules out fillings.

#include <vector>

#include "seifert/family.hpp"
#include "seifert/rational.hpp"

namespace seifert {

struct DedekindContext {
    Rational l;        // n + 1/alpha
    Rational rho;      // (alpha(n -+ (n-2g)) - r + 1) / (2n alpha + 2)
    Rational gamma;    // (r + alpha - 2) / 2
    Rational s;        // S(1, alpha)
    Rational s_rho;    // S_rho(1, alpha, gamma)
    Rational f_rho;    // F_rho(alpha, 1, gamma)
};

struct MoyVerdict {
    bool reducibles_only = false;
    bool dirac_kernels_trivial = false;
    /// Degrees of the coset deg L_k + (n + 1/alpha)Z lying in [0, deg K].
    std::vector<Rational> witness_degrees;
    Rational canonical_degree;  // deg K = 2g - 1 - 1/alpha
    Rational period;            // n + 1/alpha
    Rational representative;    // the coset element in [0, period)
    /// True when the criteria are established for these parameters
    /// (n >= 2g >= 2); false marks a formal evaluation only.
    bool anchored = false;
};

enum class D3Kind { contact, canonical };

struct D3Invariant {
    Rational value;
    D3Kind of = D3Kind::contact;
};

struct FillabilityReport {
    bool tight = true;  // cited, not computed
    D3Invariant contact;
    D3Invariant canonical;
    Rational gap;
    bool fillable = true;
};

/// Criteria for the torsion class t_can + k PD(mu) on M(g, n; (alpha, 1)).
/// Candidate degrees are k/alpha + j(n + 1/alpha).
MoyVerdict moy_check(long g, const Integer& n, const Integer& alpha, const Integer& k);

/// moy_check at the offset of the contact structure xi^{+-}_r.
MoyVerdict moy_check(const FamilyParams& p);

/// Throws Error(RangeViolation) for inadmissible (sign, r) and
/// Error(ConditionViolation) if rho = 0.
DedekindContext dedekind_context(const FamilyParams& p);

/// S(1, alpha) = (alpha^2 + 2) / (12 alpha) - 1/4.
Rational dedekind_s(const Integer& alpha);

/// omega_red assembled term by term from the Dedekind-sum context.
Rational omega_red_long(const FamilyParams& p);

/// -((n-2g)^2 alpha - r^2 n +- 2(n-2g) r) / (4(n alpha + 1)) + (2g - 1)/2.
Rational omega_red_closed(const FamilyParams& p);

/// d3 of the plane field of xi^{+-}_r: (2g - 1) - omega_red (closed form).
D3Invariant d3_contact(const FamilyParams& p);

/// d3 of the distinguished class Xi(t): -omega_red - 2, through the long form.
D3Invariant d3_canonical(const FamilyParams& p);

/// gap = d3_contact - d3_canonical; fillable = (gap == 0).
FillabilityReport fillability_verdict(const FamilyParams& p);

}  // namespace seifert
