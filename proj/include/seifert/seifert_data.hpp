#pragma once

// Seifert invariants M(g, n; (a1, b1), ..., (ak, bk)): the circle bundle of
// Euler number n over the genus g surface, with (-ai/bi)-surgeries along k
// fibers. Normal form means ai > bi >= 1 for every pair.

#include <optional>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

struct SeifertPair {
    Integer alpha;
    Integer beta;

    friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
};

struct SeifertInvariants {
    long g = 0;
    Integer n;
    std::vector<SeifertPair> pairs;

    /// n + sum(beta_i / alpha_i); invariant under Rolfsen twists.
    Rational euler() const;
    bool is_normal_form() const;

    friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

/// Orbifold line bundle with Seifert data (background; local_1, ..., local_k).
struct OrbifoldLineBundle {
    Integer background;
    std::vector<Integer> local;

    friend bool operator==(const OrbifoldLineBundle&, const OrbifoldLineBundle&) = default;
};

/// direction +1: (a, b) -> (a, b + a), n -> n - 1. direction -1 is the inverse.
SeifertInvariants rolfsen_twist(const SeifertInvariants& inv, std::size_t index, int direction);

/// Twists every pair into 1 <= beta < alpha; pairs with beta = 0 (mod alpha)
/// are dropped. Throws Error(InvalidArgument) when some alpha <= 0.
SeifertInvariants normalize(const SeifertInvariants& inv);

/// Contact surgery coefficients (r1, ..., rk) of the surgery family realizing
/// inv. Needs g >= 1, n >= 2g and alpha_1 > beta_1 >= 0, alpha_i > beta_i >= 1.
/// An empty pair list is read as (alpha_1, beta_1) = (1, 0).
std::vector<Rational> coefficients_from_seifert(const SeifertInvariants& inv);

/// Inverse of coefficients_from_seifert. Needs g >= 1, 1/2 <= r1 < 1 and
/// ri < 0 for i >= 2; throws Error(ConditionViolation) otherwise.
SeifertInvariants seifert_from_coefficients(long g, const std::vector<Rational>& rs);

/// (2g - 2; a1 - 1, ..., ak - 1).
OrbifoldLineBundle canonical_bundle(const SeifertInvariants& inv);

/// background + sum(local_i / alpha_i). Throws Error(LengthMismatch).
Rational degree(const OrbifoldLineBundle& bundle, const SeifertInvariants& inv);

/// The unique d >= 1 with d(d+1) <= 2g <= d(d+2) - 1, if any.
std::optional<long> d_range(long g);

}  // namespace seifert
