#pragma once

/**
 * The exact route to char(F_p / G).
 *
 * n is in the characteristic iff some n elements of G, counted with
 * multiplicity, sum to 0 mod p. The residues reachable as sums of exactly k
 * elements of G are tracked level by level:
 *
 *     R_1 = G,   R_{k+1} = R_k + G,   k in char  <=>  0 in R_k.
 *
 * Generator bound. For nontrivial G the characteristic contains every
 * integer >= p - 1 (some g in G has g - 1 a unit, so trading copies of 1
 * for copies of g walks through every residue). A member s >= 2(p - 1)
 * therefore splits as (p - 1) + (s - p + 1) with both parts members, so no
 * minimal generator exceeds 2p - 3. For trivial G the characteristic is pN
 * with generator p. Any table bound >= 2(p - 1) is thus sound for
 * extracting generators.
 */

#include <optional>
#include <vector>

#include "hyperchar/modular.hpp"
#include "hyperchar/numerical_monoid.hpp"

namespace hyperchar {

struct CharacteristicSet {
    Prime p;
    u64 order;
    u64 bound;
    std::vector<bool> member;  // indexed 0..bound, member[0] = true
    std::optional<u64> continuity_threshold;

    bool contains(u64 s) const { return s <= bound && member[s]; }
};

/// Default table bound, comfortably above the 2p - 3 generator ceiling.
constexpr u64 default_bound(u64 p) { return 2 * p; }

/// Throws DomainError when n does not divide p - 1 or bound < 2(p - 1).
CharacteristicSet characteristic_bitset(Prime p, u64 n, u64 bound);
CharacteristicSet characteristic_bitset(Prime p, u64 n);

GeneratingSet minimal_generating_set(const CharacteristicSet& s);

/// Smallest k with every j in [k, bound] a member; empty for trivial G.
std::optional<u64> continuity_threshold(const CharacteristicSet& s);

/// Convenience: minimal_generating_set(characteristic_bitset(p, n)).
GeneratingSet generating_set_dp(Prime p, u64 n);

/// Independent membership test by integer bookkeeping instead of residues:
/// s is a member iff s = kp - sum b_g (g - 1) for some k >= 1 and b_g >= 0
/// with sum b_g g <= kp (g ranging over G as integers in [1, p-1]).
bool kp_representation_check(Prime p, const UnitSubgroup& g, u64 s);

}  // namespace hyperchar
