#include "hyperchar/modular.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hyperchar/error.hpp"

namespace hyperchar {

u64 isqrt(u64 n) {
    if (n < 2) return n;
    // Newton from above; the initial guess 2^ceil(bits/2) is >= sqrt(n).
    int bits = 64 - __builtin_clzll(n);
    u64 x = u64{1} << ((bits + 1) / 2);
    while (true) {
        u64 y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

namespace {

bool miller_rabin_round(u64 n, u64 d, int r, u64 a) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 m) {
    if (m < 2) return false;
    constexpr std::array<u64, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : small) {
        if (m % q == 0) return m == q;
    }
    u64 d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // The first twelve primes are a deterministic witness set below 3.3e24.
    return std::all_of(small.begin(), small.end(),
                       [&](u64 a) { return miller_rabin_round(m, d, r, a); });
}

std::vector<u64> prime_factors(u64 m) {
    std::vector<u64> out;
    for (u64 q = 2; q <= m / q; q += (q == 2 ? 1 : 2)) {
        if (m % q == 0) {
            out.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

std::vector<u64> divisors(u64 m) {
    std::vector<u64> low, high;
    for (u64 d = 1; d <= m / d; ++d) {
        if (m % d == 0) {
            low.push_back(d);
            if (d != m / d) high.push_back(m / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Prime::Prime(u64 value) : value_(value) {
    if (!is_prime(value)) throw DomainError(std::to_string(value) + " is not prime");
}

u64 multiplicative_order(u64 a, Prime p) {
    a %= p;
    if (a == 0) throw DomainError("0 is not a unit");
    u64 order = p - 1;
    for (u64 q : prime_factors(p - 1)) {
        while (order % q == 0 && pow_mod(a, order / q, p) == 1) order /= q;
    }
    return order;
}

u64 find_primitive_root(Prime p) {
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool primitive = std::none_of(factors.begin(), factors.end(),
                                      [&](u64 q) { return pow_mod(g, (p - 1) / q, p) == 1; });
        if (primitive) return g;
    }
    throw DomainError("no primitive root found");  // unreachable for prime p
}

UnitSubgroup::UnitSubgroup(Prime p, u64 generator, std::vector<u64> powers)
    : p_(p), generator_(generator), powers_(std::move(powers)), elements_(powers_) {
    std::sort(elements_.begin(), elements_.end());
}

bool UnitSubgroup::contains(u64 residue) const {
    return std::binary_search(elements_.begin(), elements_.end(), residue % p_);
}

UnitSubgroup subgroup_of_order(Prime p, u64 n) {
    if (n == 0 || (p - 1) % n != 0) {
        throw DomainError("no subgroup of order " + std::to_string(n) + " in (Z/" +
                          std::to_string(p.value()) + "Z)^x");
    }
    const u64 g = pow_mod(find_primitive_root(p), (p - 1) / n, p);
    std::vector<u64> powers;
    powers.reserve(n);
    u64 x = 1;
    for (u64 k = 0; k < n; ++k) {
        powers.push_back(x);
        x = mul_mod(x, g, p);
    }
    return UnitSubgroup(p, g, std::move(powers));
}

TwoSquares cornacchia_two_squares(Prime p) {
    if (p == 2) return {1, 1};
    if (p % 4 != 1) {
        throw DomainError(std::to_string(p.value()) + " = 3 (mod 4) is not a sum of two squares");
    }
    // Square root of -1 from any quadratic non-residue c: c^((p-1)/4).
    u64 c = 2;
    while (pow_mod(c, (p - 1) / 2, p) != p - 1) ++c;
    u64 x = pow_mod(c, (p - 1) / 4, p);
    if (2 * x < p) x = p - x;

    const u64 limit = isqrt(p);
    u64 a = p, b = x;
    while (b > limit) {
        u64 r = a % b;
        a = b;
        b = r;
    }
    const u64 rest = p - b * b;
    const u64 other = isqrt(rest);
    if (other * other != rest) throw DomainError("Cornacchia reduction failed");
    return {std::max(b, other), std::min(b, other)};
}

std::pair<EisensteinPair, EisensteinPair> eisenstein_solutions(Prime p) {
    if (p % 3 != 1 || p < 7) {
        throw DomainError(std::to_string(p.value()) +
                          " admits no Eisenstein pair (need p = 1 (mod 3), p >= 7)");
    }
    // a = (b + sqrt(4p - 3b^2)) / 2; the first hit has the smallest b, so b < a - b.
    for (u64 b = 1; 3 * b * b < 4 * p; ++b) {
        const u64 disc = 4 * p - 3 * b * b;
        const u64 root = isqrt(disc);
        if (root * root != disc || (b + root) % 2 != 0 || root <= b) continue;
        const u64 a = (b + root) / 2;
        EisensteinPair first{a, b};
        EisensteinPair second{a, a - b};
        return {first, second};
    }
    throw DomainError("no Eisenstein solution found");  // unreachable for p = 1 (mod 3)
}

}  // namespace hyperchar
