#pragma once

/**
 * Cross-route verification: the exact DP, the closed forms for |G| <= 4 and
 * the norm criterion for prime |G| are run side by side and compared with
 * each other or with tabulated fixture rows.
 *
 * Independent work items may run on several threads; every report is merged
 * in input order, so output never depends on scheduling.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperchar/fixtures.hpp"
#include "hyperchar/modular.hpp"
#include "hyperchar/norm_criterion.hpp"
#include "hyperchar/numerical_monoid.hpp"

namespace hyperchar {

enum class Route { dp, closed, norm };

std::string_view route_name(Route r) noexcept;
std::optional<Route> parse_route(std::string_view name) noexcept;

/// Whether `route` covers (p, n). dp always does (for n | p - 1).
bool route_applicable(Route route, Prime p, u64 n) noexcept;
std::vector<Route> applicable_routes(Prime p, u64 n);

struct RouteOutcome {
    Route route;
    GeneratingSet generators;
    double elapsed_ms = 0.0;
    std::optional<NormCandidateSet> candidates;  // norm route only
};

/// Runs one route. Throws InapplicableRoute or DomainError on bad input.
RouteOutcome run_route(Route route, Prime p, u64 n);

struct CrossValidation {
    u64 p = 0;
    u64 n = 0;
    std::vector<RouteOutcome> outcomes;  // dp first, then closed, then norm
    bool agree = true;
    std::vector<std::string> notes;  // e.g. p appearing as a generator for |G| > 2
};

/// Requires n | p - 1 (DomainError otherwise).
CrossValidation cross_validate(Prime p, u64 n);

struct ValidationFailure {
    FixtureRow row;
    GeneratingSet computed;
    Route route;
};

struct RouteTiming {
    Route route;
    std::size_t runs = 0;
    double total_ms = 0.0;
};

struct ValidationReport {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<ValidationFailure> failures;  // one per failing (row, route)
    std::vector<std::size_t> failing_rows;    // indices into the input rows
    std::vector<RouteTiming> timing;
    std::vector<std::string> notes;
};

/// A row passes when every applicable route reproduces its generators.
ValidationReport validate_fixtures(std::span<const FixtureRow> rows, unsigned threads = 0);

/// Every (p, n) with p <= p_max prime and n | p - 1, DP route, sorted by (p, n).
std::vector<FixtureRow> generate_table(u64 p_max, unsigned threads = 0);

struct ConjectureWitness {
    u64 n;
    u64 a;
    u64 b;
    u64 prime;  // a^2 + b^2
};

struct ConjectureReport {
    u64 n_max = 0;
    std::vector<ConjectureWitness> verified;
    std::vector<u64> failures;
};

/// For each odd n in [3, n_max], the first a (ascending from ceil(n/2)) with
/// a^2 + (n - a)^2 prime. Such a prime gives a (p, 4)-hyperfield whose
/// generating set is {2, n}. Throws DomainError unless n_max is odd and >= 3.
ConjectureReport conjecture_scan(u64 n_max, unsigned threads = 0);

/// Worker count: `requested` if nonzero, else HYPERCHAR_THREADS, else the
/// hardware concurrency; HYPERCHAR_THREADS also caps an explicit request.
unsigned resolve_threads(unsigned requested = 0);

}  // namespace hyperchar
