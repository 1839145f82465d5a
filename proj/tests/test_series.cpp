#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "gtrig/core.hpp"
#include "gtrig/series.hpp"
#include "gtrig/suites.hpp"
#include "oracle/fixtures.hpp"

using namespace gtrig;

TEST(SeriesCoeffs, Examples) {
    const SeriesCoeffs classical = series_coeffs({2, 2});
    EXPECT_DOUBLE_EQ(classical.c1, 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(classical.c2, 1.0 / 120.0);
    const SeriesCoeffs c33 = series_coeffs({3, 3});
    EXPECT_DOUBLE_EQ(c33.c1, 1.0 / 12.0);
    EXPECT_DOUBLE_EQ(c33.c2, -1.0 / 252.0);
}

TEST(Series3, Examples) {
    EXPECT_EQ(series3(0.0, {3, 3}), 0.0);
    const double x = 0.3;
    EXPECT_NEAR(series3(x, {2, 2}), x - x * x * x / 6.0 + std::pow(x, 5) / 120.0, 1e-16);
    EXPECT_NEAR(series3(0.2, {3, 3}), fixtures::kSeries3At02For33, 1e-15);
    EXPECT_NEAR(series3(0.2, {3, 3}), sin_pq(0.2, {3, 3}), 1e-6);
}

TEST(Series3, FirstCorrectionIsNegative) {
    for (const Params pq : {Params{2, 2}, Params{2, 4}, Params{3, 3}, Params{1.5, 5}}) {
        for (int i = 1; i <= 50; ++i) {
            const double x = 0.5 * i / 50.0;
            EXPECT_LT(series3(x, pq), x) << x;
        }
    }
}

TEST(Series3, RatioIsEvenPolynomialInAbsPower) {
    const Params pq(3, 2.5);
    const SeriesCoeffs c = series_coeffs(pq);
    for (double x : {0.05, 0.3, 0.7}) {
        const double a = std::pow(x, pq.q());
        EXPECT_DOUBLE_EQ(series_ratio(x, pq), series_ratio(-x, pq));
        EXPECT_NEAR(series_ratio(x, pq), 1.0 - c.c1 * a + c.c2 * a * a, 2.0 * std::numeric_limits<double>::epsilon());
        EXPECT_NEAR(series3(x, pq) / x, series_ratio(x, pq), 1e-15);
        EXPECT_DOUBLE_EQ(series3(-x, pq), -series3(x, pq));
    }
    EXPECT_EQ(series_ratio(0.0, pq), 1.0);
}

TEST(Series3, Regime) {
    const Params pq(3, 3);
    const double pi = pi_pq(pq);
    EXPECT_TRUE(series_in_regime(0.25 * pi, pq));
    EXPECT_TRUE(series_in_regime(-0.2 * pi, pq));
    EXPECT_FALSE(series_in_regime(0.26 * pi, pq));
}

TEST(Series3, RemainderFixtures) {
    const double xs[] = {0.4, 0.2, 0.1, 0.05};
    for (const auto& f : fixtures::kRemainder) {
        const Params pq(f.p, f.q);
        for (int i = 0; i < 4; ++i) {
            // one ulp of sin at x is the floor for the measured remainder
            const double floor = 2.0 * std::numeric_limits<double>::epsilon() * xs[i];
            EXPECT_NEAR(series_remainder(xs[i], pq), f.r[i], 1e-5 * f.r[i] + floor)
                << f.p << "," << f.q << " x=" << xs[i];
        }
    }
}

TEST(Series3, RemainderHalvingRatio) {
    for (const Params pq : {Params{2, 2}, Params{2, 4}, Params{3, 3}}) {
        const double bound = std::pow(2.0, -(3.0 * pq.q() + 0.5));
        for (double x : {0.4, 0.2, 0.1}) {
            const double r = series_remainder(x, pq);
            const double r_half = series_remainder(0.5 * x, pq);
            EXPECT_LE(r_half, bound * r) << pq.p() << "," << pq.q() << " x=" << x;
        }
    }
}

TEST(Series3, MatchesSinAtSmallArgument) {
    for (const Params pq : {Params{2, 2}, Params{2, 4}, Params{3, 3}}) {
        EXPECT_LE(series_remainder(0.05, pq), 1e-8);
    }
}
