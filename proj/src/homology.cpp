#include "seifert/homology.hpp"

#include <algorithm>

#include "seifert/continued_fraction.hpp"
#include "seifert/error.hpp"
#include "seifert/primes.hpp"

namespace seifert {

std::optional<Integer> FirstHomology::order_of(std::size_t generator) const {
    if (generator >= class_map.size()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    Integer order = 1;
    const auto& coords = class_map[generator];
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] == 0) {
            if (coords[i] != 0) return std::nullopt;
            continue;
        }
        order = lcm(order, factors[i] / gcd(factors[i], coords[i]));
    }
    return order;
}

IntegralPresentation presentation(const SeifertInvariants& inv) {
    std::vector<std::vector<Integer>> legs;
    for (const auto& p : inv.pairs) {
        const bool regular = p.alpha == 1 && p.beta == 1;
        if (!regular && (p.beta < 1 || p.beta >= p.alpha))
            throw Error(ErrorKind::NonNormal, "pair (" + p.alpha.get_str() + ", " + p.beta.get_str() +
                                                  ") needs alpha > beta >= 1 or alpha = beta = 1");
        legs.push_back(neg_cf_expand(Rational(Integer(-p.alpha), p.beta)).entries());
    }

    std::size_t size = 1;
    for (const auto& leg : legs) size += leg.size();

    IntegralPresentation out;
    out.matrix = IntMatrix(size, size);
    out.free_rank = 2 * inv.g;
    out.matrix(0, 0) = inv.n;
    std::size_t next = 1;
    for (std::size_t l = 0; l < legs.size(); ++l) {
        std::size_t prev = 0;
        for (const auto& framing : legs[l]) {
            out.matrix(next, next) = framing;
            out.matrix(prev, next) = 1;
            out.matrix(next, prev) = 1;
            prev = next++;
        }
        if (l == 0) out.mu_index = prev;
    }
    return out;
}

FirstHomology homology(const IntegralPresentation& p) {
    const SmithForm snf = smith_normal_form(p.matrix);
    FirstHomology h;
    h.free_rank = p.free_rank;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
        const Integer& d = snf.diagonal[i];
        if (d == 1) continue;
        kept.push_back(i);
        h.factors.push_back(d);
        if (d == 0) {
            ++h.free_rank;
        } else {
            h.torsion.push_back(d);
        }
    }
    const std::size_t gens = p.matrix.rows();
    h.class_map.assign(gens, {});
    for (std::size_t j = 0; j < gens; ++j) {
        for (std::size_t f = 0; f < kept.size(); ++f) {
            const Integer& c = snf.row_transform(kept[f], j);
            const Integer& d = h.factors[f];
            h.class_map[j].push_back(d == 0 ? c : mod_floor(c, d));
        }
    }
    return h;
}

Integer mu_order(const SeifertInvariants& inv) {
    const IntegralPresentation p = presentation(inv);
    if (!p.mu_index) throw Error(ErrorKind::InvalidArgument, "no exceptional fiber, mu is undefined");
    const auto order = homology(p).order_of(*p.mu_index);
    if (!order) throw Error(ErrorKind::InfiniteOrder, "mu has infinite order");
    return *order;
}

SpinCClass c1_class(const SeifertInvariants& inv, const Integer& r) {
    if (inv.pairs.empty()) throw Error(ErrorKind::InvalidArgument, "c1_class needs an exceptional fiber");
    const Integer& alpha = inv.pairs.front().alpha;
    if (mod_floor(r - alpha, 2) != 0)
        throw Error(ErrorKind::ParityViolation, "rotation " + r.get_str() + " must have the parity of alpha");
    if (r < -alpha || r > alpha)
        throw Error(ErrorKind::RangeViolation, "rotation " + r.get_str() + " outside [-alpha, alpha]");
    SpinCClass c;
    c.basepoint = Basepoint::contact;
    c.modulus = mu_order(inv);
    c.offset = 0;
    c.c1_coefficient = mod_floor(r, c.modulus);
    c.c1_order = c.modulus / gcd(c.c1_coefficient, c.modulus);
    return c;
}

SpinCClass spinc_offset(const FamilyParams& p) {
    check_admissible(p);
    const Integer excess = p.n - 2 * p.g;
    const Integer twice = p.r - p.alpha - 2 + sign_value(p.sign) * p.alpha * excess - p.alpha * excess;
    SpinCClass c;
    c.basepoint = Basepoint::canonical;
    c.modulus = family_modulus(p.n, p.alpha);
    // r = alpha (mod 2) makes `twice` even.
    c.offset = mod_floor(twice / 2, c.modulus);
    c.c1_coefficient = mod_floor(2 * c.offset, c.modulus);
    c.c1_order = c.modulus / gcd(c.c1_coefficient, c.modulus);
    return c;
}

namespace {

// Visits every `k`-subset of [0, limit) in lexicographic order; stops when
// `visit` returns true.
template <typename Visit>
bool for_each_subset(std::size_t limit, std::size_t k, std::vector<std::size_t>& chosen, Visit&& visit) {
    if (chosen.size() == k) return visit(chosen);
    const std::size_t start = chosen.empty() ? 0 : chosen.back() + 1;
    for (std::size_t i = start; i + (k - chosen.size()) <= limit; ++i) {
        chosen.push_back(i);
        if (for_each_subset(limit, k, chosen, visit)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

DistinctWitness distinct_witness(long g, long count, long max_primes) {
    if (g < 1) throw Error(ErrorKind::InvalidArgument, "need g >= 1");
    if (count < 1) throw Error(ErrorKind::InvalidArgument, "need count >= 1");

    const Integer step = 2 * g;
    std::vector<Integer> primes;
    Integer a = 0;
    auto next_prime = [&] {
        while (true) {
            ++a;
            Integer p = step * a + 1;
            if (is_prime(p)) return p;
        }
    };

    const auto k = static_cast<std::size_t>(count);
    while (static_cast<long>(primes.size()) < max_primes) {
        primes.push_back(next_prime());
        if (primes.size() < k) continue;

        // Subsets whose largest element is the newest prime.
        std::optional<DistinctWitness> found;
        std::vector<std::size_t> chosen;
        for_each_subset(primes.size() - 1, k - 1, chosen, [&](const std::vector<std::size_t>& idx) {
            std::vector<Integer> ps;
            for (auto i : idx) ps.push_back(primes[i]);
            ps.push_back(primes.back());

            Integer product = 1;
            for (const auto& p : ps) product *= p;
            const Integer base = (product - 1) / step;
            const Integer alpha = base % 2 != 0 ? base : Integer(base * (step + 1) + 1);

            const SeifertInvariants m = family_manifold(g, step, alpha);
            DistinctWitness w{g, alpha, ps, {}, {}};
            for (const auto& p : ps) {
                if (p > alpha || mod_floor(p - alpha, 2) != 0) return false;
                w.rotations.push_back(p);
                w.orders.push_back(c1_class(m, p).c1_order);
            }
            auto sorted = w.orders;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            found = std::move(w);
            return true;
        });
        if (found) return *found;
    }
    throw Error(ErrorKind::SearchExhausted,
                "no witness among the first " + std::to_string(max_primes) + " primes of the form 2ga+1");
}

}  // namespace seifert
