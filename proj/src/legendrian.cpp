#include "seifert/legendrian.hpp"

#include "seifert/continued_fraction.hpp"
#include "seifert/error.hpp"

namespace seifert {

namespace {

void append_pushoff(PlusMinusDiagram& diagram, const Rational& coefficient, const Integer& stabs) {
    LegendrianComponent c;
    c.contact_coefficient = coefficient;
    c.stab_count = stabs;
    if (diagram.components.empty()) {
        c.accumulated_stabilizations = stabs;
    } else {
        c.parent = diagram.components.size() - 1;
        c.accumulated_stabilizations = diagram.components.back().accumulated_stabilizations + stabs;
    }
    c.tb = diagram.root_tb - c.accumulated_stabilizations;
    if (coefficient.sign() > 0) ++diagram.plus_count;
    diagram.components.push_back(std::move(c));
}

void append_negative_chain(PlusMinusDiagram& diagram, const Rational& r) {
    for (const auto& s : stabilization_counts(neg_cf_expand(r))) append_pushoff(diagram, Rational(-1), s);
}

}  // namespace

PositiveReduction reduce_positive(const Integer& p, const Integer& q) {
    if (p <= 0 || q <= 0)
        throw Error(ErrorKind::InvalidArgument, "reduce_positive needs p, q > 0, got " + p.get_str() + ", " + q.get_str());
    if (gcd(p, q) != 1)
        throw Error(ErrorKind::InvalidArgument, "reduce_positive needs coprime p, q");
    Integer k = floor_div(q, p) + 1;
    Integer rest = q - k * p;
    return {k, Rational(p, rest)};
}

PlusMinusDiagram one_over_k_to_plus_ones(const Integer& k, const Integer& root_tb, const Integer& root_rot) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "need k >= 1, got " + k.get_str());
    PlusMinusDiagram diagram;
    diagram.root_tb = root_tb;
    diagram.root_rot = root_rot;
    for (Integer i = 0; i < k; ++i) append_pushoff(diagram, Rational(1), Integer(0));
    return diagram;
}

PlusMinusDiagram convert(const Rational& r, const Integer& root_tb, const Integer& root_rot) {
    if (r.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "contact surgery coefficient must be nonzero");
    if (r.sign() < 0) {
        PlusMinusDiagram diagram;
        diagram.root_tb = root_tb;
        diagram.root_rot = root_rot;
        append_negative_chain(diagram, r);
        return diagram;
    }
    if (r.numerator() == 1) return one_over_k_to_plus_ones(r.denominator(), root_tb, root_rot);

    const auto reduction = reduce_positive(r.numerator(), r.denominator());
    PlusMinusDiagram diagram = one_over_k_to_plus_ones(reduction.k, root_tb, root_rot);
    append_negative_chain(diagram, reduction.residual);
    return diagram;
}

Integer choice_count(const PlusMinusDiagram& diagram) {
    Integer count = 1;
    for (const auto& c : diagram.components) count *= c.stab_count + 1;
    return count;
}

std::vector<StabilizationChoice> enumerate_choices(const PlusMinusDiagram& diagram, std::size_t max_choices) {
    const Integer total = choice_count(diagram);
    if (total > Integer(static_cast<unsigned long>(max_choices)))
        throw Error(ErrorKind::RangeViolation, "diagram has " + total.get_str() + " stabilization choices");

    const std::size_t n = diagram.components.size();
    std::vector<long> stabs(n);
    for (std::size_t i = 0; i < n; ++i) stabs[i] = to_long(diagram.components[i].stab_count);

    std::vector<StabilizationChoice> out;
    out.reserve(total.get_ui());
    std::vector<long> negatives(n, 0);
    while (true) {
        StabilizationChoice choice;
        choice.signs.reserve(n);
        choice.rotations.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& comp = diagram.components[i];
            const Integer pos = stabs[i] - negatives[i];
            const Integer neg = negatives[i];
            const Integer& base = comp.parent ? choice.rotations[*comp.parent] : diagram.root_rot;
            choice.signs.emplace_back(pos, neg);
            choice.rotations.push_back(base + pos - neg);
        }
        choice.rotation = n ? choice.rotations.back() : diagram.root_rot;
        out.push_back(std::move(choice));

        // Odometer over negatives, last component varying fastest.
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (negatives[i] < stabs[i]) {
                ++negatives[i];
                break;
            }
            negatives[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

Rational smooth_coefficient(const LegendrianComponent& component) {
    return component.contact_coefficient + Rational(component.tb);
}

}  // namespace seifert
