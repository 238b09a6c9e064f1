#include "hyperchar/norm_criterion.hpp"

#include <cstdint>
#include <numeric>
#include <string>

#include "hyperchar/characteristic.hpp"
#include "hyperchar/error.hpp"

namespace hyperchar {

namespace {

void require_divides(Prime p, Prime q) {
    if ((p - 1) % q != 0) {
        throw DomainError(std::to_string(q.value()) + " does not divide p - 1 = " +
                          std::to_string(p - 1));
    }
}

u64 evaluate(std::span<const u64> coeffs, u64 x, u64 p) {
    u64 acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = add_mod(mul_mod(acc, x, p), *it % p, p);
    }
    return acc;
}

}  // namespace

u64 fp_norm(std::span<const u64> coeffs, Prime p, Prime q, u64 root) {
    require_divides(p, q);
    if (coeffs.size() != q - 1) {
        throw DomainError("expected " + std::to_string(q - 1) + " coefficients, got " +
                          std::to_string(coeffs.size()));
    }
    u64 norm = 1;
    u64 conjugate = root % p;
    for (u64 i = 1; i < q; ++i) {
        norm = mul_mod(norm, evaluate(coeffs, conjugate, p), p);
        conjugate = mul_mod(conjugate, root, p);
    }
    return norm;
}

u64 fp_norm(std::span<const u64> coeffs, Prime p, Prime q) {
    require_divides(p, q);
    return fp_norm(coeffs, p, q, subgroup_of_order(p, q).generator());
}

NormCandidateSet candidate_sums(Prime p, Prime q, u64 conjugate_exponent) {
    require_divides(p, q);
    if (conjugate_exponent % q == 0) {
        throw DomainError("conjugate exponent must be coprime to q");
    }
    const u64 root = pow_mod(subgroup_of_order(p, q).generator(), conjugate_exponent, p);
    const std::size_t terms = q - 1;
    std::vector<u64> basis(terms);
    for (std::size_t j = 0; j < terms; ++j) basis[j] = pow_mod(root, j, p);

    // parent[s * p + r] = 1 + index of the last term added to reach residue r
    // with exactly s terms; 0 = unreachable.
    const u64 levels = p - 1;
    std::vector<std::uint32_t> parent((levels + 1) * p, 0);
    std::vector<char> current(p, 0), next(p, 0);
    current[0] = 1;

    NormCandidateSet out{p, q, root, {}, {}};
    for (u64 s = 1; s <= levels; ++s) {
        std::fill(next.begin(), next.end(), 0);
        auto* level = &parent[s * p];
        for (u64 r = 0; r < p; ++r) {
            if (!current[r]) continue;
            for (std::size_t j = 0; j < terms; ++j) {
                const u64 t = add_mod(r, basis[j], p);
                if (!next[t]) {
                    next[t] = 1;
                    level[t] = static_cast<std::uint32_t>(j + 1);
                }
            }
        }
        current.swap(next);
        if (!current[0]) continue;

        NormWitness w{s, std::vector<u64>(terms, 0)};
        u64 r = 0;
        for (u64 k = s; k > 0; --k) {
            const std::size_t j = parent[k * p + r] - 1;
            ++w.coeffs[j];
            r = sub_mod(r, basis[j], p);
        }
        out.sums.push_back(s);
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

NormCandidateSet candidate_sums(Prime p, Prime q) { return candidate_sums(p, q, 1); }

GeneratingSet generating_set_via_norm(const NormCandidateSet& candidates) {
    std::vector<u64> gens = candidates.sums;
    gens.push_back(candidates.p);
    gens.push_back(candidates.q);
    const auto member = monoid_closure(gens, default_bound(candidates.p));
    return irreducible_elements(member);
}

GeneratingSet generating_set_via_norm(Prime p, Prime q) {
    return generating_set_via_norm(candidate_sums(p, q));
}

BigInt binomial(u64 n, u64 k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (u64 i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt tuple_bound(Prime p, Prime q) {
    require_divides(p, q);
    BigInt bound = binomial(p + q - 2, q - 1);
    // q | p - 1 forces p >= q + 1, so the upper summation limit is >= 0.
    const u64 k_max = (p - q - 1) / q;
    for (u64 k = 0; k <= k_max; ++k) bound -= binomial(q - 2 + k * q, q - 2);
    return bound;
}

}  // namespace hyperchar
