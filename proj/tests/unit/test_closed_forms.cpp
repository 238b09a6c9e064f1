#include <gtest/gtest.h>

#include "hyperchar/characteristic.hpp"
#include "hyperchar/closed_forms.hpp"
#include "hyperchar/error.hpp"
#include "oracle/brute_force.hpp"

using namespace hyperchar;

TEST(ClosedForm, SpecExamples) {
    EXPECT_EQ(gen_set_closed_form(Prime(7), 3).generators, (std::vector<u64>{3, 4, 5}));
    EXPECT_EQ(gen_set_closed_form(Prime(29), 4).generators, (std::vector<u64>{2, 7}));
    EXPECT_EQ(gen_set_closed_form(Prime(3), 2).generators, (std::vector<u64>{2, 3}));
    EXPECT_EQ(gen_set_closed_form(Prime(2), 1).generators, (std::vector<u64>{2}));
}

TEST(ClosedForm, RejectsOutsideHypotheses) {
    EXPECT_THROW(gen_set_closed_form(Prime(31), 5), InapplicableRoute);
    EXPECT_THROW(gen_set_closed_form(Prime(7), 4), DomainError);
    EXPECT_THROW(gen_set_closed_form(Prime(11), 3), DomainError);
    EXPECT_FALSE(closed_form_applicable(Prime(5), 3));
    EXPECT_TRUE(closed_form_applicable(Prime(5), 4));
}

TEST(ClosedForm, AgreesWithDpBelow500) {
    for (u64 p : oracle::primes_below(500)) {
        for (u64 n = 1; n <= 4; ++n) {
            if (!closed_form_applicable(Prime(p), n)) continue;
            ASSERT_EQ(gen_set_closed_form(Prime(p), n), generating_set_dp(Prime(p), n)) << p << "," << n;
        }
    }
}

TEST(ClosedForm, FourthRootSumIsOdd) {
    for (u64 p : oracle::primes_below(500)) {
        if (p % 4 != 1) continue;
        const auto ab = cornacchia_two_squares(Prime(p));
        EXPECT_EQ((ab.a + ab.b) % 2, 1u) << p;
    }
}

TEST(ClosedForm, EisensteinSumsBelowTwiceRootP) {
    for (u64 p : oracle::primes_below(500)) {
        if (p % 3 != 1 || p < 7) continue;
        const auto [s, t] = eisenstein_solutions(Prime(p));
        const u64 limit = isqrt(4 * p);  // floor(2 sqrt p)
        EXPECT_LE(s.a + s.b, limit) << p;
        EXPECT_LE(t.a + t.b, limit) << p;
    }
}
