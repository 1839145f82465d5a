#include <gtest/gtest.h>

#include "gtrig/errors.hpp"
#include "gtrig/suites.hpp"

using namespace gtrig;

TEST(SuiteNames, RoundTrip) {
    for (Suite s : {Suite::redheffer, Suite::upper, Suite::cos, Suite::conditions, Suite::multiple_angle,
                    Suite::ode, Suite::series}) {
        const auto back = suite_from_name(to_string(s));
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, s);
    }
    EXPECT_EQ(to_string(Suite::multiple_angle), "multiple-angle");
    EXPECT_FALSE(suite_from_name("Redheffer").has_value());
    EXPECT_FALSE(suite_from_name("").has_value());
}

TEST(Suites, PassInTheoremRegime) {
    struct Case {
        Suite suite;
        double p, q;
        int n;
    };
    for (const Case c : {Case{Suite::redheffer, 3, 3, 500}, Case{Suite::redheffer, 10, 2, 2000},
                         Case{Suite::upper, 3, 2, 1000}, Case{Suite::cos, 2, 2, 500},
                         Case{Suite::cos, 2, 6, 500}, Case{Suite::conditions, 2, 4, 500},
                         Case{Suite::multiple_angle, 2, 3, 500}, Case{Suite::ode, 3, 3, 2000},
                         Case{Suite::series, 2, 4, 10}}) {
        const SuiteResult r = run_suite(c.suite, {c.p, c.q}, c.n);
        EXPECT_TRUE(r.pass) << to_string(c.suite) << " p=" << c.p << " q=" << c.q << "\n" << r.detail;
        EXPECT_FALSE(r.metric_name.empty());
        EXPECT_FALSE(r.detail.empty());
        EXPECT_NE(r.detail.back(), '\n');
    }
}

TEST(Suites, RegimeErrors) {
    EXPECT_THROW(run_suite(Suite::redheffer, {1.5, 3}, 100), RegimeError);
    EXPECT_THROW(run_suite(Suite::upper, {3, 3}, 100), RegimeError);
    EXPECT_THROW(run_suite(Suite::upper, {1.5, 2}, 100), RegimeError);
    EXPECT_THROW(run_suite(Suite::cos, {2, 1.5}, 100), RegimeError);
}

TEST(Suites, RejectsTinyGrid) {
    EXPECT_THROW(run_suite(Suite::redheffer, {3, 3}, 1), DomainError);
}

TEST(Suites, ConditionsFailBelowTwo) {
    const SuiteResult r = run_suite(Suite::conditions, {1.5, 1.5}, 500);
    EXPECT_FALSE(r.pass);
    EXPECT_LT(r.metric, 1.0);
}

TEST(Suites, SeriesRemainder) {
    EXPECT_LE(series_remainder(0.05, {3, 3}), 1e-8);
    EXPECT_GT(series_remainder(0.4, {3, 3}), series_remainder(0.2, {3, 3}));
}
