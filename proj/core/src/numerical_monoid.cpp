#include "hyperchar/numerical_monoid.hpp"

#include <algorithm>
#include <string>

namespace hyperchar {

bool GeneratingSet::contains(u64 g) const {
    return std::binary_search(generators.begin(), generators.end(), g);
}

std::vector<bool> monoid_closure(std::span<const u64> gens, u64 bound) {
    std::vector<bool> member(bound + 1, false);
    member[0] = true;
    for (u64 s = 1; s <= bound; ++s) {
        for (u64 g : gens) {
            if (g != 0 && g <= s && member[s - g]) {
                member[s] = true;
                break;
            }
        }
    }
    return member;
}

GeneratingSet irreducible_elements(const std::vector<bool>& member) {
    GeneratingSet out;
    for (u64 s = 1; s < member.size(); ++s) {
        if (!member[s]) continue;
        bool reducible = false;
        for (u64 i = 1; i <= s / 2 && !reducible; ++i) reducible = member[i] && member[s - i];
        if (!reducible) out.generators.push_back(s);
    }
    return out;
}

GeneratingSet minimize_generators(std::vector<u64> gens) {
    std::erase(gens, u64{0});
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) return {};
    // Every reducible generator is a sum of two nonzero members no larger than itself.
    const auto member = monoid_closure(gens, gens.back());
    GeneratingSet out;
    for (u64 g : gens) {
        bool reducible = false;
        for (u64 i = 1; i <= g / 2 && !reducible; ++i) reducible = member[i] && member[g - i];
        if (!reducible) out.generators.push_back(g);
    }
    return out;
}

std::string to_string(const GeneratingSet& g) {
    std::string s = "{";
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(g.generators[i]);
    }
    return s + "}";
}

}  // namespace hyperchar
