#pragma once

// First homology of Seifert manifolds from a star-shaped plumbing
// presentation, the order of the singular fiber class mu, and the torsion
// Spin^c classes of the contact structures on M(g, n; (alpha, 1)).
//
// Presentation convention: central vertex framed n, leg i a chain framed by
// neg_cf_expand(-alpha_i / beta_i), the genus contributing Z^{2g}. With this
// convention M(g, 2g; (alpha, 1)) has torsion Z/(2g alpha + 1) generated by mu.

#include <cstddef>
#include <optional>
#include <vector>

#include "seifert/family.hpp"
#include "seifert/seifert_data.hpp"
#include "seifert/smith_normal_form.hpp"

namespace seifert {

struct IntegralPresentation {
    IntMatrix matrix;                     // symmetric linking matrix
    std::optional<std::size_t> mu_index;  // terminal vertex of the first leg
    long free_rank = 0;                   // 2g
};

struct FirstHomology {
    long free_rank = 0;
    std::vector<Integer> torsion;  // d1 | d2 | ..., all > 1
    // Image of each meridian generator: one coordinate per entry of
    // `factors` (mod d for finite factors, unreduced for Z factors).
    std::vector<Integer> factors;  // nontrivial cyclic factors of coker; 0 means Z
    std::vector<std::vector<Integer>> class_map;

    /// Order of meridian generator j, or nullopt if it has infinite order.
    std::optional<Integer> order_of(std::size_t generator) const;
};

enum class Basepoint { canonical, contact };

/// A torsion Spin^c class on M(g, n; (alpha, 1)) in multiples of PD(mu).
/// canonical basepoint: t = t_can + offset*PD(mu), c1_coefficient = 2*offset
///   is c1(t) - c1(t_can).
/// contact basepoint: the class t_xi itself, c1_coefficient = c1(t_xi).
struct SpinCClass {
    Basepoint basepoint = Basepoint::canonical;
    Integer modulus;  // order of PD(mu)
    Integer offset;
    Integer c1_coefficient;
    Integer c1_order;
};

struct DistinctWitness {
    long g = 1;
    Integer alpha;
    std::vector<Integer> primes;
    std::vector<Integer> rotations;
    std::vector<Integer> orders;
};

/// Accepts normal-form pairs alpha > beta >= 1 and the regular-fiber pair
/// (1, 1); throws Error(NonNormal) otherwise.
IntegralPresentation presentation(const SeifertInvariants& inv);

FirstHomology homology(const IntegralPresentation& p);

/// Order of mu in H1. Throws Error(InvalidArgument) without exceptional
/// fibers and Error(InfiniteOrder) when mu has infinite order.
Integer mu_order(const SeifertInvariants& inv);

/// c1(xi_r) = r PD(mu) for the first exceptional fiber (alpha, beta).
/// Needs r = alpha (mod 2) and -alpha <= r <= alpha.
SpinCClass c1_class(const SeifertInvariants& inv, const Integer& r);

/// t_{xi^{+-}_r} = t_can + 1/2 (r - alpha - 2 +- alpha(n-2g) - alpha(n-2g)) PD(mu),
/// offset reported modulo n*alpha + 1.
SpinCClass spinc_offset(const FamilyParams& p);

/// Primes p_i = 2g a_i + 1 and alpha with p_1...p_count | 2g alpha + 1 such
/// that the rotations r_i = p_i give contact structures whose c1 orders are
/// pairwise distinct. Combinations are searched by increasing largest prime,
/// lexicographically below it; the first validated one is returned.
/// Throws Error(SearchExhausted) past `max_primes` candidate primes.
DistinctWitness distinct_witness(long g, long count, long max_primes = 5000);

}  // namespace seifert
