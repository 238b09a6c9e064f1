#pragma once

/**
 * Exact modular arithmetic over Z/pZ and the number-theoretic primitives the
 * rest of the library is built on: deterministic primality, primitive roots,
 * cyclic subgroups of (Z/pZ)^x, and solvers for the two binary quadratic
 * forms a^2 + b^2 and a^2 - ab + b^2.
 *
 * Every value here is immutable after construction. Products are widened to
 * 128 bits; nothing goes through floating point.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hyperchar {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 add_mod(u64 a, u64 b, u64 m) {
    // a, b < m
    u64 s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

constexpr u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

constexpr u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// floor(sqrt(n)), exact for all 64-bit n.
u64 isqrt(u64 n);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(u64 m);

/// Distinct prime factors of m by trial division, ascending.
std::vector<u64> prime_factors(u64 m);

/// All positive divisors of m, ascending.
std::vector<u64> divisors(u64 m);

/// A 64-bit prime, checked at construction.
class Prime {
public:
    explicit Prime(u64 value);

    constexpr u64 value() const noexcept { return value_; }
    constexpr operator u64() const noexcept { return value_; }

    friend constexpr auto operator<=>(Prime, Prime) = default;

private:
    u64 value_;
};

/// Multiplicative order of a modulo p (a must be a unit).
u64 multiplicative_order(u64 a, Prime p);

/// Smallest g in [1, p-1] whose multiplicative order is p - 1.
u64 find_primitive_root(Prime p);

/// The unique subgroup of (Z/pZ)^x of a given order.
class UnitSubgroup {
public:
    Prime prime() const noexcept { return p_; }
    u64 order() const noexcept { return elements_.size(); }

    /// g^((p-1)/order) for the smallest primitive root g.
    u64 generator() const noexcept { return generator_; }

    /// generator^k for k = 0..order-1, in that order (starts with 1).
    std::span<const u64> powers() const noexcept { return powers_; }

    /// The same elements, sorted ascending.
    std::span<const u64> elements() const noexcept { return elements_; }

    bool contains(u64 residue) const;

private:
    friend UnitSubgroup subgroup_of_order(Prime p, u64 n);
    UnitSubgroup(Prime p, u64 generator, std::vector<u64> powers);

    Prime p_;
    u64 generator_;
    std::vector<u64> powers_;
    std::vector<u64> elements_;
};

/// Throws DomainError when n does not divide p - 1.
UnitSubgroup subgroup_of_order(Prime p, u64 n);

struct TwoSquares {
    u64 a;  // a >= b > 0
    u64 b;
    friend constexpr bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

/// Unique a >= b > 0 with a^2 + b^2 = p, via Cornacchia's algorithm.
/// Throws DomainError for p = 3 (mod 4).
TwoSquares cornacchia_two_squares(Prime p);

struct EisensteinPair {
    u64 a;  // a > b > 0, a^2 - ab + b^2 = p
    u64 b;
    friend constexpr bool operator==(const EisensteinPair&, const EisensteinPair&) = default;
};

/// The two positive solutions (a, b) and (a, a - b) of x^2 - xy + y^2 = p,
/// with the smaller second coordinate first. Requires p = 1 (mod 3), p >= 7.
std::pair<EisensteinPair, EisensteinPair> eisenstein_solutions(Prime p);

}  // namespace hyperchar
