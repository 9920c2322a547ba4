#include "seifert/continued_fraction.hpp"

#include "seifert/error.hpp"

namespace seifert {

NegContinuedFraction::NegContinuedFraction(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorKind::InvalidArgument, "continued fraction has no entries");
    if (entries_.front() > -1)
        throw Error(ErrorKind::InvalidArgument, "leading entry must be <= -1, got " + entries_.front().get_str());
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] > -2)
            throw Error(ErrorKind::InvalidArgument,
                        "entry " + std::to_string(i) + " must be <= -2, got " + entries_[i].get_str());
    }
}

NegContinuedFraction neg_cf_expand(const Rational& r) {
    if (r.sign() >= 0) throw Error(ErrorKind::NonNegativeCoefficient, "expansion needs r < 0, got " + r.to_string());
    std::vector<Integer> entries;
    Rational tail = r;
    while (true) {
        // Every tail after the first is < -1, so floor() never produces -1 there.
        const Integer c = tail.floor();
        entries.push_back(c);
        if (tail.is_integer()) break;
        tail = -(tail - Rational(c)).reciprocal();
    }
    return NegContinuedFraction(std::move(entries));
}

Rational neg_cf_value(const NegContinuedFraction& cf) {
    const auto& e = cf.entries();
    Rational value(e.back());
    for (auto it = e.rbegin() + 1; it != e.rend(); ++it) value = Rational(*it) - value.reciprocal();
    return value;
}

std::vector<Integer> stabilization_counts(const NegContinuedFraction& cf) {
    std::vector<Integer> counts;
    counts.reserve(cf.size());
    for (std::size_t i = 0; i < cf.size(); ++i) counts.push_back(-cf.entries()[i] - (i == 0 ? 1 : 2));
    return counts;
}

}  // namespace seifert
