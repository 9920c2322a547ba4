#pragma once

// Negative continued fractions [c0, c1, ..., cm] = c0 - 1/(c1 - 1/(... - 1/cm))
// with c0 <= -1 and ci <= -2 for i >= 1. These drive the conversion of a
// negative contact surgery into Legendrian surgeries on a chain of pushoffs.

#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

class NegContinuedFraction {
public:
    /// Validates the entry constraints; throws Error(InvalidArgument) otherwise.
    explicit NegContinuedFraction(std::vector<Integer> entries);

    const std::vector<Integer>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const NegContinuedFraction&, const NegContinuedFraction&) = default;

private:
    std::vector<Integer> entries_;
};

/// The unique expansion of r < 0 whose tails are all < -1.
/// Throws Error(NonNegativeCoefficient) for r >= 0.
NegContinuedFraction neg_cf_expand(const Rational& r);

Rational neg_cf_value(const NegContinuedFraction& cf);

/// Stabilizations per pushoff: -c0-1 for the first entry, -ci-2 for the rest.
std::vector<Integer> stabilization_counts(const NegContinuedFraction& cf);

}  // namespace seifert
