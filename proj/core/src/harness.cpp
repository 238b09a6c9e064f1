#include "hyperchar/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>

#include "hyperchar/characteristic.hpp"
#include "hyperchar/closed_forms.hpp"
#include "hyperchar/error.hpp"

namespace hyperchar {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any task is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

template <class F>
auto timed(F&& f, double& elapsed_ms) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
    return result;
}

}  // namespace

std::string_view route_name(Route r) noexcept {
    switch (r) {
    case Route::dp: return "dp";
    case Route::closed: return "closed";
    case Route::norm: return "norm";
    }
    return "?";
}

std::optional<Route> parse_route(std::string_view name) noexcept {
    if (name == "dp") return Route::dp;
    if (name == "closed") return Route::closed;
    if (name == "norm") return Route::norm;
    return std::nullopt;
}

bool route_applicable(Route route, Prime p, u64 n) noexcept {
    if (n == 0 || (p - 1) % n != 0) return false;
    switch (route) {
    case Route::dp: return true;
    case Route::closed: return closed_form_applicable(p, n);
    case Route::norm: return is_prime(n);
    }
    return false;
}

std::vector<Route> applicable_routes(Prime p, u64 n) {
    std::vector<Route> out;
    for (Route r : {Route::dp, Route::closed, Route::norm}) {
        if (route_applicable(r, p, n)) out.push_back(r);
    }
    return out;
}

RouteOutcome run_route(Route route, Prime p, u64 n) {
    if (n == 0 || (p - 1) % n != 0) {
        throw DomainError(std::to_string(n) + " does not divide p - 1 = " + std::to_string(p - 1));
    }
    RouteOutcome out{route, {}, 0.0, std::nullopt};
    switch (route) {
    case Route::dp:
        out.generators = timed([&] { return generating_set_dp(p, n); }, out.elapsed_ms);
        break;
    case Route::closed:
        if (!closed_form_applicable(p, n)) {
            throw InapplicableRoute("closed form covers |G| in {1, 2, 3, 4} only");
        }
        out.generators = timed([&] { return gen_set_closed_form(p, n); }, out.elapsed_ms);
        break;
    case Route::norm: {
        if (!is_prime(n)) throw InapplicableRoute("norm criterion needs prime |G|");
        const Prime q(n);
        out.candidates = timed([&] { return candidate_sums(p, q); }, out.elapsed_ms);
        double extract_ms = 0.0;
        out.generators = timed([&] { return generating_set_via_norm(*out.candidates); }, extract_ms);
        out.elapsed_ms += extract_ms;
        break;
    }
    }
    return out;
}

CrossValidation cross_validate(Prime p, u64 n) {
    CrossValidation cv;
    cv.p = p;
    cv.n = n;
    for (Route r : applicable_routes(p, n)) cv.outcomes.push_back(run_route(r, p, n));
    if (cv.outcomes.empty()) {
        throw DomainError(std::to_string(n) + " does not divide p - 1 = " + std::to_string(p - 1));
    }
    const GeneratingSet& reference = cv.outcomes.front().generators;
    for (const auto& o : cv.outcomes) cv.agree = cv.agree && o.generators == reference;
    if (n > 2 && reference.contains(p)) {
        cv.notes.push_back("p = " + std::to_string(p.value()) + " is a minimal generator for |G| = " +
                           std::to_string(n));
    }
    return cv;
}

ValidationReport validate_fixtures(std::span<const FixtureRow> rows, unsigned threads) {
    std::vector<CrossValidation> results(rows.size());
    parallel_for(rows.size(), resolve_threads(threads),
                 [&](std::size_t i) { results[i] = cross_validate(Prime(rows[i].p), rows[i].order); });

    ValidationReport report;
    report.total = rows.size();
    for (Route r : {Route::dp, Route::closed, Route::norm}) report.timing.push_back({r, 0, 0.0});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool row_ok = true;
        for (const auto& o : results[i].outcomes) {
            auto& t = report.timing[static_cast<std::size_t>(o.route)];
            ++t.runs;
            t.total_ms += o.elapsed_ms;
            if (o.generators.generators != rows[i].generators) {
                row_ok = false;
                report.failures.push_back({rows[i], o.generators, o.route});
            }
        }
        if (row_ok) {
            ++report.passed;
        } else {
            report.failing_rows.push_back(i);
        }
        for (auto& note : results[i].notes) report.notes.push_back(std::move(note));
    }
    return report;
}

std::vector<FixtureRow> generate_table(u64 p_max, unsigned threads) {
    std::vector<FixtureRow> rows;
    for (u64 p = 2; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        for (u64 n : divisors(p - 1)) rows.push_back({p, n, {}, 0});
    }
    parallel_for(rows.size(), resolve_threads(threads), [&](std::size_t i) {
        rows[i].generators = generating_set_dp(Prime(rows[i].p), rows[i].order).generators;
    });
    return rows;
}

ConjectureReport conjecture_scan(u64 n_max, unsigned threads) {
    if (n_max < 3 || n_max % 2 == 0) throw DomainError("n_max must be odd and >= 3");
    const std::size_t count = (n_max - 1) / 2;  // n = 3, 5, ..., n_max
    std::vector<std::optional<ConjectureWitness>> found(count);
    parallel_for(count, resolve_threads(threads), [&](std::size_t i) {
        const u64 n = 3 + 2 * i;
        for (u64 a = (n + 1) / 2; a < n; ++a) {
            const u64 b = n - a;
            const u64 q = a * a + b * b;
            if (is_prime(q)) {
                found[i] = ConjectureWitness{n, a, b, q};
                return;
            }
        }
    });
    ConjectureReport report;
    report.n_max = n_max;
    for (std::size_t i = 0; i < count; ++i) {
        if (found[i]) {
            report.verified.push_back(*found[i]);
        } else {
            report.failures.push_back(3 + 2 * i);
        }
    }
    return report;
}

unsigned resolve_threads(unsigned requested) {
    unsigned cap = 0;
    if (const char* env = std::getenv("HYPERCHAR_THREADS")) {
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
        if (ec == std::errc{} && value > 0) cap = value;
    }
    unsigned n = requested ? requested : (cap ? cap : std::thread::hardware_concurrency());
    if (cap) n = std::min(n, cap);
    return std::max(1u, n);
}

}  // namespace hyperchar
