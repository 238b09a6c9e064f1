#include "hyperchar/characteristic.hpp"

#include <limits>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "hyperchar/error.hpp"

namespace hyperchar {

namespace {

using Residues = boost::dynamic_bitset<>;

// next = union over g of (current + g) mod p, as cyclic rotations of a p-bit set.
void step(const Residues& current, std::span<const u64> group, u64 p, Residues& next,
          Residues& scratch) {
    next.reset();
    for (u64 g : group) {
        scratch = current;
        scratch <<= g;
        next |= scratch;
        scratch = current;
        scratch >>= (p - g);
        next |= scratch;
    }
}

}  // namespace

CharacteristicSet characteristic_bitset(Prime p, u64 n, u64 bound) {
    const UnitSubgroup group = subgroup_of_order(p, n);
    if (bound < 2 * (p - 1)) {
        throw DomainError("bound " + std::to_string(bound) + " is below 2(p-1) = " +
                          std::to_string(2 * (p - 1)));
    }
    CharacteristicSet out{p, n, bound, std::vector<bool>(bound + 1, false), std::nullopt};
    out.member[0] = true;

    Residues current(p), next(p), scratch(p);
    for (u64 g : group.elements()) current.set(g);
    for (u64 k = 1; k <= bound; ++k) {
        out.member[k] = current.test(0);
        if (current.all()) {
            // Adding a unit permutes F_p, so a full level stays full.
            std::fill(out.member.begin() + static_cast<std::ptrdiff_t>(k), out.member.end(), true);
            break;
        }
        if (k < bound) {
            step(current, group.elements(), p, next, scratch);
            current.swap(next);
        }
    }
    out.continuity_threshold = continuity_threshold(out);
    return out;
}

CharacteristicSet characteristic_bitset(Prime p, u64 n) {
    return characteristic_bitset(p, n, default_bound(p));
}

GeneratingSet minimal_generating_set(const CharacteristicSet& s) {
    return irreducible_elements(s.member);
}

std::optional<u64> continuity_threshold(const CharacteristicSet& s) {
    // pN is never cofinite, whatever the bound happens to hit.
    if (s.order == 1 || !s.member[s.bound]) return std::nullopt;
    u64 k = s.bound;
    while (k > 0 && s.member[k - 1]) --k;
    return k;
}

GeneratingSet generating_set_dp(Prime p, u64 n) {
    return minimal_generating_set(characteristic_bitset(p, n));
}

bool kp_representation_check(Prime p, const UnitSubgroup& g, u64 s) {
    if (s == 0) return true;
    std::vector<u64> steps;  // g - 1 for g != 1
    for (u64 x : g.elements()) {
        if (x != 1) steps.push_back(x - 1);
    }
    // kp - s = sum b_g (g - 1) <= (p - 2) sum b_g <= (p - 2) s bounds k.
    const u64 k_max = (p - 1) * s / p;
    const u64 k_min = (s + p - 1) / p;
    if (k_min > k_max) return false;
    const u64 t_max = k_max * p - s;
    constexpr u64 inf = std::numeric_limits<u64>::max();
    std::vector<u64> fewest(t_max + 1, inf);  // fewest trades summing to t
    fewest[0] = 0;
    for (u64 t = 1; t <= t_max; ++t) {
        for (u64 d : steps) {
            if (d <= t && fewest[t - d] != inf) fewest[t] = std::min(fewest[t], fewest[t - d] + 1);
        }
    }
    for (u64 k = k_min; k <= k_max; ++k) {
        if (fewest[k * p - s] <= s) return true;
    }
    return false;
}

}  // namespace hyperchar
