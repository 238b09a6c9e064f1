// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cli.hpp"
#include "hyperchar/characteristic.hpp"
#include "hyperchar/closed_forms.hpp"
#include "hyperchar/fixtures.hpp"
#include "hyperchar/harness.hpp"
#include "hyperchar/hyperfield.hpp"
#include "hyperchar/norm_criterion.hpp"
#include "oracle/brute_force.hpp"

using namespace hyperchar;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_s;  // 0 = no time limit
    std::function<Outcome()> body;
};

std::string fmt_set(const std::vector<u64>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s + "}";
}

Outcome reproduce_fixture(const char* file, std::size_t expected_rows) {
    const auto rows = load_fixtures(std::string(HYPERCHAR_DATA_DIR) + "/" + file);
    Outcome out;
    std::size_t mismatches = 0, dropped_second = 0;
    std::string first;
    for (const auto& row : rows) {
        const auto dp = generating_set_dp(Prime(row.p), row.order).generators;
        if (dp == row.generators) continue;
        ++mismatches;
        auto without_second = dp;
        if (without_second.size() >= 2) without_second.erase(without_second.begin() + 1);
        if (without_second == row.generators) ++dropped_second;
        if (first.empty()) {
            first = "first: (" + std::to_string(row.p) + "," + std::to_string(row.order) + ") table " +
                    fmt_set(row.generators) + " computed " + fmt_set(dp);
        }
    }
    out.ok = mismatches == 0 && rows.size() == expected_rows;
    out.detail = std::to_string(rows.size()) + " rows, " + std::to_string(mismatches) + " mismatches";
    if (mismatches) {
        out.detail += "; " + std::to_string(dropped_second) +
                      " of them equal the computed set with its second-smallest generator removed; " + first;
    }
    return out;
}

Outcome closed_vs_dp() {
    std::size_t checked = 0;
    for (u64 p : oracle::primes_below(500)) {
        for (u64 n = 1; n <= 4; ++n) {
            if (!closed_form_applicable(Prime(p), n)) continue;
            ++checked;
            if (gen_set_closed_form(Prime(p), n) != generating_set_dp(Prime(p), n)) {
                return {false, "disagree at (" + std::to_string(p) + "," + std::to_string(n) + ")"};
            }
        }
    }
    return {true, std::to_string(checked) + " (p, n) pairs"};
}

Outcome norm_vs_dp() {
    std::size_t checked = 0;
    for (u64 p : oracle::primes_below(200)) {
        for (u64 q : {3ULL, 5ULL, 7ULL, 11ULL}) {
            if ((p - 1) % q != 0) continue;
            ++checked;
            const auto cand = candidate_sums(Prime(p), Prime(q));
            const auto dp = generating_set_dp(Prime(p), q);
            const std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            if (generating_set_via_norm(cand) != dp) return {false, "disagree at " + at};
            for (u64 g : dp.generators) {
                if (g != p && g != q && !std::binary_search(cand.sums.begin(), cand.sums.end(), g)) {
                    return {false, "generator " + std::to_string(g) + " not a candidate at " + at};
                }
            }
        }
    }
    return {true, std::to_string(checked) + " (p, q) pairs, containment holds"};
}

Outcome axioms() {
    std::size_t checked = 0;
    for (u64 p : oracle::primes_below(32)) {
        for (u64 n : oracle::divisors_of(p - 1)) {
            ++checked;
            const auto r = check_axioms(build_quotient(Prime(p), n));
            if (!r.all_ok() || !r.reversibility_ok || !r.reversibility_from_distributivity_ok) {
                return {false, "axiom failure at (" + std::to_string(p) + "," + std::to_string(n) + ")"};
            }
        }
    }
    return {true, std::to_string(checked) + " hyperfields, all flags true"};
}

Outcome continuity() {
    std::size_t checked = 0;
    for (u64 p : oracle::primes_below(200)) {
        for (u64 n : oracle::divisors_of(p - 1)) {
            if (n == 1) continue;
            ++checked;
            const auto t = characteristic_bitset(Prime(p), n).continuity_threshold;
            if (!t || *t > p - 1) {
                return {false, "threshold above p-1 at (" + std::to_string(p) + "," + std::to_string(n) + ")"};
            }
        }
    }
    return {true, std::to_string(checked) + " nontrivial (p, n) pairs"};
}

Outcome kp_equivalence() {
    std::size_t checked = 0;
    for (u64 p : oracle::primes_below(32)) {
        for (u64 n : oracle::divisors_of(p - 1)) {
            const auto s = characteristic_bitset(Prime(p), n);
            const auto g = subgroup_of_order(Prime(p), n);
            for (u64 x = 1; x <= 2 * (p - 1); ++x) {
                ++checked;
                if (kp_representation_check(Prime(p), g, x) != s.contains(x)) {
                    return {false, "differs at s=" + std::to_string(x) + " for (" + std::to_string(p) + "," +
                                       std::to_string(n) + ")"};
                }
            }
        }
    }
    return {true, std::to_string(checked) + " memberships"};
}

Outcome conjecture() {
    const auto r = conjecture_scan(10001, 1);
    return {r.failures.empty() && r.verified.size() == 5000,
            std::to_string(r.verified.size()) + " witnesses, " + std::to_string(r.failures.size()) + " failures"};
}

Outcome tuple_bounds() {
    using boost::multiprecision::cpp_int;
    if (tuple_bound(Prime(7), Prime(3)) != 23) return {false, "tuple_bound(7,3) != 23"};
    if (tuple_bound(Prime(13), Prime(3)) != 69) return {false, "tuple_bound(13,3) != 69"};
    std::size_t checked = 0;
    for (u64 p : oracle::primes_below(200)) {
        for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
            if ((p - 1) % q != 0) continue;
            ++checked;
            if (tuple_bound(Prime(p), Prime(q)) > boost::multiprecision::pow(cpp_int(p), unsigned(q - 1))) {
                return {false, "exceeds p^(q-1) at (" + std::to_string(p) + "," + std::to_string(q) + ")"};
            }
        }
    }
    return {true, "23, 69; bounded by p^(q-1) on " + std::to_string(checked) + " pairs"};
}

Outcome determinism() {
    std::ostringstream a, b, err;
    const int ca = cli::run({"table", "--p-max", "200"}, a, err);
    const int cb = cli::run({"table", "--p-max", "200"}, b, err);
    const bool same = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
    return {same, std::to_string(a.str().size()) + " bytes, " + (same ? "identical" : "differ")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "table1 reproduction (dp)", 1.0, [] { return reproduce_fixture("table1.txt", 64); }},
        {2, "appendix reproduction p < 200 (dp)", 30.0, [] { return reproduce_fixture("appendix_a.txt", 354); }},
        {3, "closed forms agree with dp, p < 500", 60.0, closed_vs_dp},
        {4, "norm criterion agrees with dp, q in {3,5,7,11}, p < 200", 60.0, norm_vs_dp},
        {5, "hyperfield axioms, p <= 31", 10.0, axioms},
        {6, "continuity threshold <= p-1, p < 200", 0.0, continuity},
        {7, "kp-representation matches dp, p <= 31", 10.0, kp_equivalence},
        {8, "a+b=n prime search, odd n <= 10001", 30.0, conjecture},
        {9, "tuple bound values and ceiling", 0.0, tuple_bounds},
        {10, "table --p-max 200 is byte-identical across runs", 0.0, determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && s >= c.budget_s) {
            o.ok = false;
            o.detail += "; over time budget";
        }
        if (!o.ok) ++failed;
        std::printf("[%s] %2d %-58s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), s,
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
