#pragma once

/**
 * Finite criterion for |G| = q prime.
 *
 * Besides p and q, every minimal generator is a coefficient sum
 * a_0 + ... + a_{q-2} with 0 <= a_i < p whose cyclotomic norm
 * N(a_0 + a_1 z + ... + a_{q-2} z^{q-2}) vanishes mod p, z a primitive q-th
 * root of unity. Reducing mod p sends z to the canonical generator g of the
 * order-q subgroup, so the norm is congruent to the product of the
 * conjugates f(g^i), i = 1..q-1, computed entirely in F_p.
 *
 * F_p has no zero divisors, so that product vanishes iff one conjugate does,
 * and each conjugate g^i again generates G. Candidates are therefore found
 * by a residue dynamic program over sums of exactly s terms drawn from
 * {1, g, ..., g^{q-2}} instead of enumerating the p^{q-1} tuples.
 */

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperchar/modular.hpp"
#include "hyperchar/numerical_monoid.hpp"

namespace hyperchar {

using BigInt = boost::multiprecision::cpp_int;

struct NormWitness {
    u64 sum;
    std::vector<u64> coeffs;  // q - 1 entries, sum(coeffs) = sum, f(g) = 0 mod p
};

struct NormCandidateSet {
    Prime p;
    Prime q;
    u64 root;               // the power basis is root^0 .. root^{q-2}
    std::vector<u64> sums;  // ascending, each in [1, p - 1]
    std::vector<NormWitness> witnesses;  // witnesses[i].sum == sums[i]
};

/// prod_{i=1}^{q-1} f(g^i) mod p, with f(x) = sum coeffs[j] x^j and g the
/// generator of subgroup_of_order(p, q). Requires coeffs.size() == q - 1.
u64 fp_norm(std::span<const u64> coeffs, Prime p, Prime q);

/// Same product for an explicit primitive q-th root of unity `root`.
u64 fp_norm(std::span<const u64> coeffs, Prime p, Prime q, u64 root);

/// Candidate sums for the canonical generator. Throws DomainError when q does
/// not divide p - 1.
NormCandidateSet candidate_sums(Prime p, Prime q);

/// Candidate sums using the conjugate power basis (g^e)^0 .. (g^e)^{q-2};
/// e must be coprime to q.
NormCandidateSet candidate_sums(Prime p, Prime q, u64 conjugate_exponent);

/// Minimal generators of the monoid generated by {p, q} and the candidates.
GeneratingSet generating_set_via_norm(Prime p, Prime q);
GeneratingSet generating_set_via_norm(const NormCandidateSet& candidates);

/// C(p+q-2, q-1) - sum_{k=0}^{floor((p-q-1)/q)} C(q-2+kq, q-2): the count of
/// coefficient tuples left to test once sums >= p and multiples of q are
/// excluded.
BigInt tuple_bound(Prime p, Prime q);

BigInt binomial(u64 n, u64 k);

}  // namespace hyperchar
