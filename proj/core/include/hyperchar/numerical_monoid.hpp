#pragma once

#include <span>
#include <string>
#include <vector>

#include "hyperchar/modular.hpp"

namespace hyperchar {

/// Sorted, distinct positive integers; minimal when produced by this library.
struct GeneratingSet {
    std::vector<u64> generators;

    bool contains(u64 g) const;
    friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;
};

/// Membership table on [0, bound] of the submonoid of N generated by `gens`.
std::vector<bool> monoid_closure(std::span<const u64> gens, u64 bound);

/// Elements of a membership table that are not a sum of two nonzero members.
/// The table must be closed under addition within its range.
GeneratingSet irreducible_elements(const std::vector<bool>& member);

/// Sorts, deduplicates and drops every element that is a non-negative
/// combination of the others.
GeneratingSet minimize_generators(std::vector<u64> gens);

/// "{3, 4, 5}"
std::string to_string(const GeneratingSet& g);

}  // namespace hyperchar
