#pragma once

// Test-only reference computations. Each one follows a definition directly
// and shares no code path with the library routine it checks.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 m) {
    if (m < 2) return false;
    for (u64 d = 2; d * d <= m; ++d) {
        if (m % d == 0) return false;
    }
    return true;
}

inline u64 order_of(u64 a, u64 p) {
    u64 x = a % p, k = 1;
    while (x != 1) {
        x = x * a % p;
        ++k;
    }
    return k;
}

inline u64 smallest_primitive_root(u64 p) {
    if (p == 2) return 1;
    for (u64 g = 1; g < p; ++g) {
        if (order_of(g, p) == p - 1) return g;
    }
    return 0;
}

/// All x in [1, p-1] with x^n = 1 (the unique order-n subgroup), sorted.
inline std::vector<u64> roots_of_unity(u64 p, u64 n) {
    std::vector<u64> out;
    for (u64 x = 1; x < p; ++x) {
        u64 y = 1;
        for (u64 k = 0; k < n; ++k) y = y * x % p;
        if (y == 1) out.push_back(x);
    }
    return out;
}

/// Orbits of Z/pZ under multiplication by G, each sorted, listed by minimum.
inline std::vector<std::vector<u64>> orbits(u64 p, const std::vector<u64>& group) {
    std::vector<std::vector<u64>> out;
    std::vector<bool> seen(p, false);
    for (u64 r = 0; r < p; ++r) {
        if (seen[r]) continue;
        std::set<u64> orbit;
        for (u64 g : group) orbit.insert(r * g % p);
        for (u64 x : orbit) seen[x] = true;
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

/// Whether some tuple (a_g) of non-negative integers with sum s has
/// sum a_g * g = 0 mod p, by explicit enumeration of the tuples.
inline bool partition_member(u64 p, const std::vector<u64>& group, u64 s) {
    std::function<bool(std::size_t, u64, u64)> go = [&](std::size_t i, u64 left, u64 residue) {
        if (i + 1 == group.size()) return (residue + left * group[i]) % p == 0;
        for (u64 a = 0; a <= left; ++a) {
            if (go(i + 1, left - a, (residue + a * group[i]) % p)) return true;
        }
        return false;
    };
    return go(0, s, 0);
}

/// Minimal generators of a membership table by the definition: members not
/// expressible as a non-negative combination of smaller members.
inline std::vector<u64> minimal_generators(const std::vector<bool>& member) {
    std::vector<u64> gens;
    const u64 bound = member.size() - 1;
    for (u64 s = 1; s <= bound; ++s) {
        if (!member[s]) continue;
        // Reachable with the generators found so far?
        std::vector<bool> reach(s + 1, false);
        reach[0] = true;
        for (u64 t = 1; t <= s; ++t) {
            for (u64 g : gens) {
                if (g <= t && reach[t - g]) reach[t] = true;
            }
        }
        if (!reach[s]) gens.push_back(s);
    }
    return gens;
}

inline std::vector<std::pair<u64, u64>> two_square_reps(u64 p) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 a = 1; a * a < p; ++a) {
        for (u64 b = 1; b <= a; ++b) {
            if (a * a + b * b == p) out.emplace_back(a, b);
        }
    }
    return out;
}

/// All (x, y) with 1 <= x, y <= limit and x^2 - xy + y^2 = p.
inline std::set<std::pair<u64, u64>> eisenstein_reps(u64 p, u64 limit) {
    std::set<std::pair<u64, u64>> out;
    for (u64 x = 1; x <= limit; ++x) {
        for (u64 y = 1; y <= limit; ++y) {
            if (x * x + y * y == p + x * y) out.emplace(x, y);
        }
    }
    return out;
}

/// Product over i = 1..q-1 of f(g^i) mod p, evaluated term by term.
inline u64 norm_mod_p(const std::vector<u64>& coeffs, u64 p, u64 q, u64 g) {
    u64 prod = 1;
    for (u64 i = 1; i < q; ++i) {
        u64 gi = 1;
        for (u64 k = 0; k < i; ++k) gi = gi * g % p;
        u64 value = 0, power = 1;
        for (u64 c : coeffs) {
            value = (value + c % p * power) % p;
            power = power * gi % p;
        }
        prod = prod * value % p;
    }
    return prod;
}

/// Coefficient sums below p of all tuples in [0, p-1]^{q-1} with vanishing norm.
inline std::set<u64> norm_zero_sums(u64 p, u64 q, u64 g) {
    std::set<u64> sums;
    std::vector<u64> coeffs(q - 1, 0);
    while (true) {
        u64 s = 0;
        for (u64 c : coeffs) s += c;
        if (s > 0 && s < p && !sums.count(s) && norm_mod_p(coeffs, p, q, g) == 0) sums.insert(s);
        std::size_t i = 0;
        while (i < coeffs.size() && ++coeffs[i] == p) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
    }
    return sums;
}

inline boost::multiprecision::cpp_int pascal(u64 n, u64 k) {
    std::vector<boost::multiprecision::cpp_int> row{1};
    for (u64 i = 1; i <= n; ++i) {
        std::vector<boost::multiprecision::cpp_int> next(i + 1, 1);
        for (u64 j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return k <= n ? row[k] : 0;
}

inline std::vector<u64> primes_below(u64 limit) {
    std::vector<u64> out;
    for (u64 p = 2; p < limit; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

inline std::vector<u64> divisors_of(u64 m) {
    std::vector<u64> out;
    for (u64 d = 1; d <= m; ++d) {
        if (m % d == 0) out.push_back(d);
    }
    return out;
}

}  // namespace oracle
