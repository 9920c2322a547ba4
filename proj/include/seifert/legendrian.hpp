#pragma once

// Conversion of a rational contact surgery on a Legendrian knot K into
// contact (+1)/(-1) surgeries on a link of Legendrian pushoffs of K.
//
//   r < 0       : a chain of (-1) pushoffs, stabilized according to the
//                 negative continued fraction of r.
//   r = 1/k     : k (+1) pushoffs.
//   r = p/q > 0 : k (+1) pushoffs (k minimal with q - kp < 0), followed by the
//                 negative chain for the residual p/(q - kp).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

struct LegendrianComponent {
    Rational contact_coefficient;     // +1 or -1
    Integer stab_count;               // stabilizations added on top of the parent
    std::optional<std::size_t> parent;  // nullopt: pushoff of the root knot K
    Integer tb;
    Integer accumulated_stabilizations;  // stab_count summed along the ancestor chain
};

struct PlusMinusDiagram {
    std::vector<LegendrianComponent> components;
    std::size_t plus_count = 0;
    Integer root_tb;
    Integer root_rot;
};

/// One way of choosing stabilization signs. Two choices are distinct iff
/// their (#positive, #negative) vectors differ.
struct StabilizationChoice {
    std::vector<std::pair<Integer, Integer>> signs;  // (#positive, #negative) per component
    std::vector<Integer> rotations;                  // rotation number per component
    Integer rotation;                                // rotation of the last component

    friend bool operator==(const StabilizationChoice&, const StabilizationChoice&) = default;
};

struct PositiveReduction {
    Integer k;          // number of (+1) pushoff surgeries
    Rational residual;  // p/(q - kp) < 0, applied to one further pushoff
};

inline constexpr long kDefaultRootTb = -1;
inline constexpr long kDefaultRootRot = 0;

/// Minimal k >= 1 with q - kp < 0. Rejects p <= 0, q <= 0 or gcd(p, q) != 1.
PositiveReduction reduce_positive(const Integer& p, const Integer& q);

/// k pushoffs, all contact (+1), unstabilized.
PlusMinusDiagram one_over_k_to_plus_ones(const Integer& k, const Integer& root_tb = kDefaultRootTb,
                                         const Integer& root_rot = kDefaultRootRot);

/// Throws Error(ZeroCoefficient) for r = 0.
PlusMinusDiagram convert(const Rational& r, const Integer& root_tb = kDefaultRootTb,
                         const Integer& root_rot = kDefaultRootRot);

/// Product over components of (stab_count + 1).
Integer choice_count(const PlusMinusDiagram& diagram);

/// All stabilization choices, in lexicographic order of the per-component
/// negative-stabilization counts. Refuses diagrams with more than
/// `max_choices` choices (Error(RangeViolation)).
std::vector<StabilizationChoice> enumerate_choices(const PlusMinusDiagram& diagram,
                                                   std::size_t max_choices = 1u << 20);

/// Contact framing shifted to the smooth framing: coefficient + tb.
Rational smooth_coefficient(const LegendrianComponent& component);

}  // namespace seifert
