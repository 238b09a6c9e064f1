#include "hyperchar/closed_forms.hpp"

#include <string>

#include "hyperchar/error.hpp"

namespace hyperchar {

bool closed_form_applicable(Prime p, u64 n) noexcept {
    if (n < 1 || n > 4 || (p - 1) % n != 0) return false;
    if (n == 3) return p >= 7;
    if (n == 4) return p >= 5;
    return true;
}

GeneratingSet gen_set_closed_form(Prime p, u64 n) {
    if (n < 1 || n > 4) {
        throw InapplicableRoute("no closed form for |G| = " + std::to_string(n));
    }
    if ((p - 1) % n != 0) {
        throw DomainError(std::to_string(n) + " does not divide p - 1 = " + std::to_string(p - 1));
    }
    switch (n) {
    case 1:
        return {{p.value()}};
    case 2:
        return minimize_generators({2, p.value()});
    case 3: {
        if (p < 7) throw DomainError("|G| = 3 closed form needs p >= 7");
        const auto [first, second] = eisenstein_solutions(p);
        // first.a + first.b and second.a + second.b = 2a - b.
        return minimize_generators({3, first.a + first.b, second.a + second.b});
    }
    default: {
        if (p < 5) throw DomainError("|G| = 4 closed form needs p >= 5");
        const TwoSquares ab = cornacchia_two_squares(p);
        return minimize_generators({2, ab.a + ab.b});
    }
    }
}

}  // namespace hyperchar
