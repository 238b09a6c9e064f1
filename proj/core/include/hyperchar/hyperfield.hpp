#pragma once

/**
 * Krasner quotient hyperfields F_p / G.
 *
 * Elements are the orbits of Z/pZ under multiplication by a subgroup G of
 * units. Each orbit is named by its smallest member. Multiplication is
 * single valued, [a] * [b] = [ab]; hyperaddition returns every orbit that
 * meets the setwise sum of the two orbits.
 */

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hyperchar/modular.hpp"

namespace hyperchar {

struct ClassId {
    u64 rep;  // minimum of its orbit
    friend constexpr auto operator<=>(ClassId, ClassId) = default;
};

struct ClassSet {
    std::vector<ClassId> members;  // sorted, unique

    bool contains(ClassId c) const;
    std::size_t size() const noexcept { return members.size(); }
    friend bool operator==(const ClassSet&, const ClassSet&) = default;
};

class QuotientHyperfield {
public:
    QuotientHyperfield(Prime p, u64 n);

    Prime prime() const noexcept { return group_.prime(); }
    const UnitSubgroup& subgroup() const noexcept { return group_; }

    /// Sorted by representative; classes()[0] is [0].
    const std::vector<ClassId>& classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.size(); }

    ClassId class_of(u64 residue) const { return classes_[index_of_residue(residue)]; }
    std::size_t index_of(ClassId c) const { return index_of_residue(c.rep); }
    std::size_t index_of_residue(u64 residue) const { return orbit_index_[residue % prime()]; }
    const std::vector<u64>& orbit(ClassId c) const { return orbits_[index_of(c)]; }

    ClassId zero() const noexcept { return classes_[0]; }
    ClassId one() const { return class_of(1); }
    ClassId negate(ClassId c) const { return class_of(prime() - c.rep); }

    ClassSet add(ClassId x, ClassId y) const;
    ClassId mul(ClassId x, ClassId y) const;

    /// Setwise extension: the union of x + y over x in a, y in b.
    ClassSet add(const ClassSet& a, const ClassSet& b) const;

private:
    UnitSubgroup group_;
    std::vector<ClassId> classes_;
    std::vector<std::size_t> orbit_index_;
    std::vector<std::vector<u64>> orbits_;
};

QuotientHyperfield build_quotient(Prime p, u64 n);
ClassSet hyperadd(const QuotientHyperfield& h, ClassId x, ClassId y);
ClassId hypermul(const QuotientHyperfield& h, ClassId x, ClassId y);

/// Whether 0 lies in the n-fold hypersum [1] + ... + [1], by iterated
/// set-valued addition. Decides n in char(h).
bool n_fold_sum_contains_zero(const QuotientHyperfield& h, u64 n);

struct AxiomWitness {
    std::string axiom;
    u64 x = 0, y = 0, z = 0;  // class representatives
};

struct AxiomReport {
    bool identity_ok = true;            // 0 + x = {x}, 1 * x = x
    bool inverse_unique_ok = true;      // exactly one y with 0 in x + y
    bool reversibility_ok = true;       // x in y + z  <=>  z in x + (-y)
    bool reversibility_from_distributivity_ok = true;
    bool associativity_ok = true;       // setwise +, and *
    bool commutativity_ok = true;       // + and *
    bool distributivity_ok = true;      // a(x + y) = ax + ay
    bool absorption_ok = true;          // x * 0 = 0
    bool multiplicative_inverses_ok = true;  // 0 != 1, every nonzero class invertible
    std::vector<AxiomWitness> counterexamples;

    bool all_ok() const noexcept;
};

/// Exhaustive audit over all class triples; O(c^3) in the class count c.
/// Meant for p up to a couple of hundred.
AxiomReport check_axioms(const QuotientHyperfield& h);

}  // namespace hyperchar
