#include "gtrig/redheffer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "gtrig/errors.hpp"

namespace gtrig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Sample {
    double lhs;
    double rhs;
    bool equality;
};

double qpower_with_pi(double x, double pi, double q) {
    if (q == 2.0) return lower_bound(x, pi);
    const double aq = std::pow(pi, q);
    const double xq = std::pow(std::fabs(x), q);
    return (aq - xq) / (aq + xq);
}

double upper_p2_formula(double x, double p) { return (6.0 * p - x * x) / (6.0 * p + x * x); }

// Evaluates `eval` (returning std::optional<Sample>) at each grid point.
template <class Eval>
InequalityReport run_grid(const Params& params, const GridSpec& grid, std::string bound, Eval&& eval) {
    grid.validate();
    InequalityReport rep{params, grid, std::move(bound), kInf, grid.lo, {}, false, 0};
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.at(i);
        const std::optional<Sample> s = eval(x);
        if (!s) continue;
        ++rep.evaluated;
        const double margin = s->rhs - s->lhs;
        if (margin <= -kStrictnessTolerance) rep.violations.push_back({x, s->lhs, s->rhs, margin});
        if (!s->equality && margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.argmin_x = x;
        }
    }
    rep.holds = rep.evaluated > 0 && rep.violations.empty();
    return rep;
}

InequalityReport explore_two_sided_p2(const GenTrig& g, const GridSpec& grid, const Accuracy&) {
    const double pi = g.pi();
    const double p = g.params().p();
    return run_grid(g.params(), grid, to_string(BoundKind::upper_p2),
                    [&](double x) -> std::optional<Sample> {
                        if (std::fabs(x) < grid.exclusion_radius) return std::nullopt;
                        const double ratio = g.sin_ratio(x);
                        const double lo = lower_bound(x, pi);
                        const double up = upper_p2_formula(x, p);
                        // report whichever side is tighter
                        if (ratio - lo <= up - ratio) return Sample{lo, ratio, false};
                        return Sample{ratio, up, false};
                    });
}

void require_grid_within(const GridSpec& grid, double lo, double hi, const char* what) {
    const double slack = 1e-12 * std::max(1.0, std::fabs(hi));
    if (grid.lo < lo - slack || grid.hi > hi + slack) {
        throw DomainError(std::string(what) + ": grid leaves the admissible interval");
    }
}

double golden_minimize(const std::function<double(double)>& fn, double a, double b, double tol) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = fn(c);
    double fd = fn(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = fn(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

void GridSpec::validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi) || n < 2 || !(exclusion_radius >= 0.0)) {
        throw DomainError("grid requires lo < hi, n >= 2 and exclusion_radius >= 0");
    }
}

double GridSpec::at(int i) const {
    if (i == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::eq_gri: return "eq-gri";
        case BoundKind::q_power: return "q-power";
        case BoundKind::upper_p2: return "upper-p2";
    }
    return "unknown";
}

double lower_bound(double x, double a) {
    const double a2 = a * a;
    const double x2 = x * x;
    return (a2 - x2) / (a2 + x2);
}

double qpower_bound(double x, const Params& params) {
    return qpower_with_pi(x, pi_pq(params), params.q());
}

double upper_bound_sin_p2(double x, double p) {
    if (!(p >= 2.0)) throw DomainError("upper_bound_sin_p2 requires p >= 2");
    return upper_p2_formula(x, p);
}

double d_limit(double p) {
    if (!(p >= 2.0) || !std::isfinite(p)) throw DomainError("d_limit requires 2 <= p < inf");
    return -2.0 / p;
}

double d_limit_numeric(double p, double h, const Accuracy& acc) {
    return sin_pq_dd(h, Params(p, 2.0), acc) / h;
}

InequalityReport explore_inequality(const Params& params, const GridSpec& grid, BoundKind bound,
                                    const Accuracy& acc) {
    const GenTrig g(params, acc);
    const double pi = g.pi();
    const double tol = acc.abs_tol;
    if (bound == BoundKind::upper_p2) return explore_two_sided_p2(g, grid, acc);

    return run_grid(params, grid, to_string(bound), [&](double x) -> std::optional<Sample> {
        if (std::fabs(x) < grid.exclusion_radius) return std::nullopt;
        const double ratio = g.sin_ratio(x);
        const double lhs = bound == BoundKind::eq_gri ? lower_bound(x, pi)
                                                      : qpower_with_pi(x, pi, params.q());
        return Sample{lhs, ratio, std::fabs(std::fabs(x) - pi) <= tol};
    });
}

InequalityReport check_theorem_gri2(const Params& params, const GridSpec& grid, const Accuracy& acc) {
    if (!params.theorem_regime()) {
        throw RegimeError("the pi_pq Redheffer bound is established only for 2 <= p, q < inf");
    }
    return explore_inequality(params, grid, BoundKind::eq_gri, acc);
}

std::optional<QpowerViolation> find_qpower_counterexample(const Params& params, const Accuracy& acc) {
    const GenTrig g(params, acc);
    const double pi = g.pi();
    const double q = params.q();
    auto margin = [&](double x) { return g.sin_ratio(x) - qpower_with_pi(x, pi, q); };

    constexpr int kSteps = 500;  // (pi/2, pi) at spacing 1e-3 pi
    auto abscissa = [&](int k) { return pi * (0.5 + 1e-3 * k); };

    std::optional<double> crossing;
    int best_k = -1;
    double best_m = kInf;
    double prev_m = margin(abscissa(0));
    if (prev_m < best_m) {
        best_m = prev_m;
        best_k = 0;
    }
    for (int k = 1; k < kSteps; ++k) {
        const double m = margin(abscissa(k));
        if (!crossing && prev_m > 0.0 && m <= 0.0) {
            double lo = abscissa(k - 1);
            double hi = abscissa(k);
            for (int it = 0; it < acc.max_iter && hi - lo > acc.abs_tol; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (margin(mid) > 0.0) lo = mid; else hi = mid;
            }
            crossing = hi;
        }
        if (m < best_m) {
            best_m = m;
            best_k = k;
        }
        prev_m = m;
    }
    if (!(best_m <= -kStrictnessTolerance)) return std::nullopt;

    const double a = abscissa(std::max(best_k - 1, 0));
    const double b = best_k + 1 < kSteps ? abscissa(best_k + 1) : pi;
    double x = golden_minimize(margin, a, b, 1e-10);
    if (margin(x) > best_m) x = abscissa(best_k);

    QpowerViolation out;
    out.deepest.x = x;
    out.deepest.lhs = qpower_with_pi(x, pi, q);
    out.deepest.rhs = g.sin_ratio(x);
    out.deepest.margin = out.deepest.rhs - out.deepest.lhs;
    out.crossing = crossing;
    return out;
}

InequalityReport check_cos_corollary(double q, const GridSpec& grid, const Accuracy& acc) {
    if (!(q >= 2.0)) throw RegimeError("the cosine corollary requires 2 <= q < inf");
    const Params params(q / (q - 1.0), q);
    const GenTrig g(params, acc);
    const double pi = g.pi();
    const double power = params.p() - 1.0;
    grid.validate();
    require_grid_within(grid, 0.0, pi, "check_cos_corollary");
    return run_grid(params, grid, "cos-corollary", [&](double x) -> std::optional<Sample> {
        if (std::fabs(x) < grid.exclusion_radius) return std::nullopt;
        return Sample{lower_bound(x, pi), abs_pow(g.cos(0.5 * x), power), false};
    });
}

IdentityReport check_multiple_angle(double q, const GridSpec& grid, const Accuracy& acc) {
    grid.validate();
    const Params conj(q / (q - 1.0), q);
    const GenTrig g2(Params(2.0, q), acc);
    const GenTrig gc(conj, acc);
    require_grid_within(grid, 0.0, 0.5 * gc.pi(), "check_multiple_angle");

    const double scale = std::pow(2.0, 2.0 / q);
    const double power = conj.p() - 1.0;
    IdentityReport rep;
    rep.q = q;
    rep.grid = grid;
    rep.constant_defect = std::fabs(g2.pi() - std::pow(2.0, 2.0 / q - 1.0) * gc.pi());
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.at(i);
        const double lhs = g2.sin(scale * x);
        const double rhs = scale * gc.sin(x) * abs_pow(gc.cos(x), power);
        const double defect = std::fabs(lhs - rhs);
        ++rep.evaluated;
        if (defect > rep.max_defect || i == 0) {
            rep.max_defect = defect;
            rep.argmax_x = x;
        }
    }
    return rep;
}

ProofQuantities proof_quantities(double x, const Params& params, const Accuracy& acc) {
    const GenTrig g(params, acc);
    const double a = g.pi();
    if (!(x > 0.0 && x < a)) throw DomainError("proof_quantities requires x in (0, pi_pq)");

    const double s = g.sin(x);
    const double d = g.sin_defect(x);  // x - S
    ProofQuantities out;
    out.f = x * x * (2.0 * x - d) / d;
    if (x <= g.half_pi()) {
        // g S = x^2 (1 - S') - 3 x (x - S) + (x - S)^2, free of the
        // leading-order cancellation near 0.
        const double e = g.cos_defect(x);
        out.g = (x * x * e - 3.0 * x * d + d * d) / s;
    } else {
        // 1 + S'(x) = 1 - S'(a - x)
        const double one_plus = g.cos_defect(a - x);
        out.g = x + s - x * x * one_plus / s;
    }
    try {
        const double c = g.cos(x);
        out.s4 = c * c - g.sin_dd(x) * s;
    } catch (const SingularPointError&) {
        out.s4.reset();
    }
    return out;
}

ConditionReport check_conditions(const Params& params, const GridSpec& grid, const Accuracy& acc) {
    grid.validate();
    const GenTrig g(params, acc);
    const double a = g.pi();
    const double mid = g.half_pi();

    ConditionReport rep;
    rep.excluded_points = {mid};
    rep.s2_holds = true;
    rep.s4_min_value = kInf;
    rep.s4_min_value_fd = kInf;

    constexpr double fd_h = 1e-4;
    const double fd_window = std::max(grid.exclusion_radius, 100.0 * fd_h);
    bool s2_seen = false;

    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.at(i);
        const double s = g.sin(x);
        rep.s1_max_defect = std::max({rep.s1_max_defect, std::fabs(g.sin(-x) + s),
                                      std::fabs(g.sin(x + a) + s)});
        if (x > 0.0 && x < a) {
            s2_seen = true;
            if (!(s > 0.0 && g.sin_defect(x) > 0.0)) rep.s2_holds = false;
        }
        if (x >= 0.0 && x < a && std::fabs(x - mid) > grid.exclusion_radius) {
            try {
                const double c = g.cos(x);
                const double v = c * c - g.sin_dd(x) * s;
                if (v < rep.s4_min_value) {
                    rep.s4_min_value = v;
                    rep.s4_argmin_x = x;
                }
            } catch (const SingularPointError&) {
            }
        }
        if (x >= fd_h && x <= a - fd_h && std::fabs(x - mid) > fd_window) {
            const double sp = g.sin(x + fd_h);
            const double sm = g.sin(x - fd_h);
            const double d1 = (sp - sm) / (2.0 * fd_h);
            const double d2 = (sp - 2.0 * s + sm) / (fd_h * fd_h);
            rep.s4_min_value_fd = std::min(rep.s4_min_value_fd, d1 * d1 - d2 * s);
        }
    }
    if (!s2_seen) rep.s2_holds = false;

    auto slopes = [&](double h) {
        const double center = g.sin(mid);
        return std::pair{(center - g.sin(mid - h)) / h, (g.sin(mid + h) - center) / h};
    };
    const auto [l4, r4] = slopes(1e-4);
    const auto [l6, r6] = slopes(1e-6);
    rep.s3_left_slope = l6;
    rep.s3_right_slope = r6;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "one-sided slopes of S at pi/2: h=1e-4 (%.3e, %.3e), h=1e-6 (%.3e, %.3e); "
                  "%s with a continuous S' vanishing at pi/2",
                  l4, r4, l6, r6,
                  std::fabs(l6 - r6) < std::fabs(l4 - r4) ? "consistent" : "not consistent");
    rep.s3_note = buf;
    return rep;
}

InequalityReport check_upper_p2(double p, const GridSpec& grid, const Accuracy& acc) {
    if (!(p >= 2.0)) throw RegimeError("the two-sided sin_{p,2} estimate requires 2 <= p < inf");
    const GenTrig g(Params(p, 2.0), acc);
    grid.validate();
    require_grid_within(grid, 0.0, g.pi(), "check_upper_p2");
    return explore_two_sided_p2(g, grid, acc);
}

double s4_reduction(double t, const Params& params) {
    const double r = params.q() / params.p();
    return (1.0 - r) * t * t + r * abs_pow(t, 2.0 - params.p()) - 1.0;
}

}  // namespace gtrig
