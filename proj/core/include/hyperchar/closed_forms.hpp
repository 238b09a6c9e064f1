#pragma once

#include "hyperchar/modular.hpp"
#include "hyperchar/numerical_monoid.hpp"

namespace hyperchar {

/// Explicit generating sets for |G| in {1, 2, 3, 4}:
///
///   |G| = 1:  {p}
///   |G| = 2:  {2, p}
///   |G| = 3:  {3, a + b, 2a - b}   with a^2 - ab + b^2 = p, a > b > 0
///   |G| = 4:  {2, a + b}           with a^2 + b^2 = p
///
/// The result is reduced to a minimal set. Throws InapplicableRoute for any
/// other order, and DomainError when n does not divide p - 1 or when the
/// closed form's lower bound on p fails (p >= 7 for n = 3, p >= 5 for n = 4).
GeneratingSet gen_set_closed_form(Prime p, u64 n);

bool closed_form_applicable(Prime p, u64 n) noexcept;

}  // namespace hyperchar
