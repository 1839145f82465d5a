#include "gtrig/suites.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gtrig/errors.hpp"
#include "gtrig/ode_oracle.hpp"
#include "gtrig/series.hpp"

namespace gtrig {

namespace {

struct SuiteName {
    Suite suite;
    std::string_view name;
};

constexpr std::array<SuiteName, 7> kNames = {{
    {Suite::redheffer, "redheffer"},
    {Suite::upper, "upper"},
    {Suite::cos, "cos"},
    {Suite::conditions, "conditions"},
    {Suite::multiple_angle, "multiple-angle"},
    {Suite::ode, "ode"},
    {Suite::series, "series"},
}};

template <class... Args>
std::string format(const char* fmt, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

SuiteResult from_inequality(Suite suite, const InequalityReport& rep) {
    SuiteResult r;
    r.suite = suite;
    r.pass = rep.holds;
    r.metric_name = "min_margin";
    r.metric = rep.min_margin;
    r.violations = rep.violations;
    r.detail = format("bound %s, p=%.17g q=%.17g, grid [%.17g, %.17g] n=%d\n"
                      "min margin %.6e at x=%.17g, %zu violation(s)",
                      rep.bound.c_str(), rep.params.p(), rep.params.q(), rep.grid.lo, rep.grid.hi,
                      rep.grid.n, rep.min_margin, rep.argmin_x, rep.violations.size());
    return r;
}

SuiteResult run_redheffer(const Params& params, int n, const Accuracy& acc) {
    if (!params.theorem_regime()) {
        throw RegimeError("suite redheffer requires the hypothesis 2 <= p, q < inf");
    }
    const GenTrig g(params, acc);
    const double pi = g.pi();
    SuiteResult r = from_inequality(Suite::redheffer, check_theorem_gri2(params, {0.01, 4.0 * pi, n}, acc));
    const double at_pi = g.sin_ratio(pi) - lower_bound(pi, pi);
    r.pass = r.pass && r.metric > 0.0 && std::fabs(at_pi) <= kEqualityTolerance;
    r.detail += format("\nmargin at x=pi_pq: %.3e (equality point)", at_pi);
    return r;
}

SuiteResult run_conditions(const Params& params, int n, const Accuracy& acc) {
    const double pi = pi_pq(params);
    const ConditionReport c = check_conditions(params, {0.0, pi, n}, acc);
    SuiteResult r;
    r.suite = Suite::conditions;
    r.metric_name = "s4_min";
    r.metric = c.s4_min_value;
    r.pass = c.s1_max_defect <= kEqualityTolerance && c.s2_holds &&
             c.s4_min_value >= 1.0 - kS4Tolerance;
    r.detail = format("S1 max defect %.3e\nS2 0<S(x)<x on grid: %s\nS3 %s\n"
                      "S4 min of S'^2-S''S: %.12f at x=%.6f (finite differences: %.8f)\n"
                      "excluded point pi/2 = %.17g",
                      c.s1_max_defect, c.s2_holds ? "yes" : "no", c.s3_note.c_str(), c.s4_min_value,
                      c.s4_argmin_x, c.s4_min_value_fd, c.excluded_points.front());
    if (!params.theorem_regime()) r.detail += "\nnote: outside 2 <= p, q; no bound is claimed";
    return r;
}

SuiteResult run_multiple_angle(const Params& params, int n, const Accuracy& acc) {
    const double q = params.q();
    const double half = 0.5 * pi_pq(Params(params.conjugate_q(), q));
    const IdentityReport id = check_multiple_angle(q, {0.0, half, n}, acc);
    SuiteResult r;
    r.suite = Suite::multiple_angle;
    r.metric_name = "max_defect";
    r.metric = id.max_defect;
    r.pass = id.max_defect <= kIdentityTolerance && id.constant_defect <= kConstantTolerance;
    r.detail = format("q=%.17g, grid [0, %.17g] n=%d\nmax identity defect %.3e at x=%.17g\n"
                      "|pi_{2,q} - 2^{2/q-1} pi_{q*,q}| = %.3e",
                      q, half, n, id.max_defect, id.argmax_x, id.constant_defect);
    return r;
}

SuiteResult run_ode(const Params& params, int n, const Accuracy& acc) {
    const GenTrig g(params, acc);
    const double pi = g.pi();
    const IvpPath path = solve_ivp(params, pi, pi / std::max(n, 2000));
    double worst = 0.0;
    double worst_x = 0.0;
    for (const auto& s : path.samples) {
        const double d = std::fabs(s.u - g.sin(s.x));
        if (d > worst) {
            worst = d;
            worst_x = s.x;
        }
    }
    const double energy = max_energy_defect(path, params);
    SuiteResult r;
    r.suite = Suite::ode;
    r.metric_name = "max_deviation";
    r.metric = worst;
    r.pass = worst <= kOdeTolerance && energy <= kEnergyTolerance;
    r.detail = format("RK4 on [0, %.17g], %zu steps of %.6e\nmax |u - sin_pq| %.3e at x=%.6f\n"
                      "max energy defect %.3e",
                      pi, path.samples.size() - 1, path.step, worst, worst_x, energy);
    return r;
}

SuiteResult run_series(const Params& params, const Accuracy& acc) {
    const double bound = std::pow(2.0, -(3.0 * params.q() + 0.5));
    SuiteResult r;
    r.suite = Suite::series;
    r.metric_name = "worst_ratio_over_bound";
    r.metric = 0.0;
    r.pass = true;
    const SeriesCoeffs c = series_coeffs(params);
    r.detail = format("c1=%.17g c2=%.17g, remainder ratio bound 2^-(3q+1/2)=%.6e", c.c1, c.c2, bound);
    for (double x : {0.4, 0.2, 0.1}) {
        const double rx = series_remainder(x, params, acc);
        const double rh = series_remainder(0.5 * x, params, acc);
        double ratio = 0.0;
        if (rh > 0.0) ratio = rx > 0.0 ? rh / rx : std::numeric_limits<double>::infinity();
        r.metric = std::max(r.metric, ratio / bound);
        r.pass = r.pass && ratio <= bound;
        r.detail += format("\nR(%g)=%.6e R(%g)=%.6e ratio %.6e", x, rx, 0.5 * x, rh, ratio);
    }
    const double match = series_remainder(0.05, params, acc);
    r.pass = r.pass && match <= kSeriesMatchTolerance;
    r.detail += format("\n|sin_pq(0.05) - series3(0.05)| = %.3e", match);
    return r;
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
    for (const auto& n : kNames) {
        if (n.name == name) return n.suite;
    }
    return std::nullopt;
}

std::string to_string(Suite suite) {
    for (const auto& n : kNames) {
        if (n.suite == suite) return std::string(n.name);
    }
    return "unknown";
}

double series_remainder(double x, const Params& params, const Accuracy& acc) {
    return std::fabs(sin_pq(x, params, acc) - series3(x, params));
}

SuiteResult run_suite(Suite suite, const Params& params, int n, const Accuracy& acc) {
    if (n < 2) throw DomainError("grid size n must be at least 2");
    switch (suite) {
        case Suite::redheffer:
            return run_redheffer(params, n, acc);
        case Suite::upper: {
            if (params.q() != 2.0 || params.p() < 2.0) {
                throw RegimeError("suite upper requires q = 2 and 2 <= p < inf");
            }
            const double pi = pi_pq(params);
            return from_inequality(suite, check_upper_p2(params.p(), {0.01, pi - 0.01, n}, acc));
        }
        case Suite::cos: {
            if (params.q() < 2.0) throw RegimeError("suite cos requires the hypothesis 2 <= q < inf");
            const double pi = pi_pq(Params(params.conjugate_q(), params.q()));
            return from_inequality(suite, check_cos_corollary(params.q(), {0.01, pi - 0.01, n}, acc));
        }
        case Suite::conditions:
            return run_conditions(params, n, acc);
        case Suite::multiple_angle:
            return run_multiple_angle(params, n, acc);
        case Suite::ode:
            return run_ode(params, n, acc);
        case Suite::series:
            return run_series(params, acc);
    }
    throw DomainError("unknown suite");
}

}  // namespace gtrig
