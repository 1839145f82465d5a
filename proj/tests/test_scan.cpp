#include <clocale>
#include <cmath>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "gtrig/core.hpp"
#include "gtrig/errors.hpp"
#include "gtrig/redheffer.hpp"
#include "gtrig/scan.hpp"

using namespace gtrig;

TEST(Scan, GridAndColumns) {
    const auto rows = scan({3, 3}, 0.01, 2.418, 500);
    ASSERT_EQ(rows.size(), 500u);
    EXPECT_EQ(rows.front().x, 0.01);
    EXPECT_EQ(rows.back().x, 2.418);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].x, rows[i - 1].x);
    const GenTrig g({3, 3});
    for (const auto& r : rows) {
        EXPECT_FALSE(r.upper.has_value());
        EXPECT_EQ(r.sin_ratio, g.sin_ratio(r.x));
        EXPECT_EQ(r.margin, r.sin_ratio - r.lower);
        EXPECT_NEAR(r.qpower, qpower_bound(r.x, {3, 3}), 1e-15);
    }
}

TEST(Scan, QpowerRisesAboveRatio) {
    const auto rows = scan({3, 3}, 0.01, 2.418, 500);
    int above = 0;
    for (const auto& r : rows) above += r.qpower > r.sin_ratio;
    EXPECT_GT(above, 0);
    EXPECT_LT(rows.front().qpower, rows.front().sin_ratio);
    EXPECT_GT(rows.back().qpower, rows.back().sin_ratio);
}

TEST(Scan, Q2CoincidenceAndUpperColumn) {
    const double pi = std::numbers::pi;
    const auto rows = scan({2, 2}, 0.01, pi, 300);
    for (const auto& r : rows) {
        EXPECT_NEAR(r.lower, r.qpower, 1e-15);
        ASSERT_TRUE(r.upper.has_value());
        EXPECT_GE(*r.upper, r.sin_ratio);
    }
    EXPECT_NEAR(rows.back().margin, 0.0, 1e-6);
    // the upper estimate is defined for p >= 2 only
    for (const auto& r : scan({1.5, 2}, 0.1, 1.0, 5)) EXPECT_FALSE(r.upper.has_value());
}

TEST(Scan, RejectsBadGrid) {
    EXPECT_THROW(scan({3, 3}, 1.0, 0.5, 10), DomainError);
    EXPECT_THROW(scan({3, 3}, 0.0, 1.0, 1), DomainError);
}

TEST(Csv, Layout) {
    const std::string csv = render_csv(scan({2, 2}, 0.5, 1.0, 2));
    const std::string expected_header = "x,sin_ratio,lower,qpower,upper,margin\n";
    ASSERT_EQ(csv.rfind(expected_header, 0), 0u);
    EXPECT_EQ(csv.back(), '\n');
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    EXPECT_NE(csv.find("\n0.5,"), std::string::npos);
    EXPECT_NE(csv.find("\n1,"), std::string::npos);
    const std::string no_upper = render_csv(scan({3, 3}, 0.5, 1.0, 2));
    EXPECT_NE(no_upper.find(",,"), std::string::npos);
}

TEST(Csv, SeventeenDigits) {
    EXPECT_EQ(format_real(0.1), "0.10000000000000001");
    EXPECT_EQ(format_real(1.0), "1");
    EXPECT_EQ(format_real(-2.5e-20), "-2.4999999999999999e-20");
}

TEST(Csv, RoundTripIsByteExact) {
    for (const Params pq : {Params{3, 3}, Params{2, 2}, Params{5, 2}, Params{1.5, 4}}) {
        const std::string csv = render_csv(scan(pq, 0.01, 7.0, 333));
        const auto parsed = parse_csv(csv);
        EXPECT_EQ(parsed, scan(pq, 0.01, 7.0, 333));
        EXPECT_EQ(render_csv(parsed), csv);
    }
}

TEST(Csv, Deterministic) {
    EXPECT_EQ(render_csv(scan({3, 3}, 0.01, 2.418, 500)), render_csv(scan({3, 3}, 0.01, 2.418, 500)));
}

TEST(Csv, IndependentOfLocale) {
    const std::string before = render_csv(scan({3, 3}, 0.01, 1.0, 7));
    if (std::setlocale(LC_ALL, "de_DE.UTF-8") == nullptr) GTEST_SKIP() << "locale not installed";
    const std::string after = render_csv(scan({3, 3}, 0.01, 1.0, 7));
    std::setlocale(LC_ALL, "C");
    EXPECT_EQ(before, after);
}

TEST(Csv, RejectsMalformed) {
    EXPECT_THROW(parse_csv(""), DomainError);
    EXPECT_THROW(parse_csv("x,y\n"), DomainError);
    const std::string header = "x,sin_ratio,lower,qpower,upper,margin\n";
    EXPECT_THROW(parse_csv(header + "1,2,3,4,,5"), DomainError);
    EXPECT_THROW(parse_csv(header + "1,2,3,4,5\n"), DomainError);
    EXPECT_THROW(parse_csv(header + "1,2,3,4,,5,6\n"), DomainError);
    EXPECT_THROW(parse_csv(header + "1,2,x,4,,5\n"), DomainError);
    EXPECT_NO_THROW(parse_csv(header));
}
