#include "gtrig/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gtrig/errors.hpp"
#include "gtrig/series.hpp"

namespace gtrig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSingularWindow = 1e-12;
constexpr double kSeriesRatioRadius = 1e-6;

[[noreturn]] void throw_no_convergence(const char* where, int max_iter) {
    throw ConvergenceError(std::string(where) + ": no convergence within " +
                           std::to_string(max_iter) + " iterations");
}

}  // namespace

double abs_pow(double z, double e) {
    const double a = std::fabs(z);
    if (a == 0.0) {
        if (e == 0.0) return 1.0;
        return e > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::pow(a, e);
}

double signed_pow(double z, double e) {
    const double m = abs_pow(z, e);
    return z < 0.0 ? -m : m;
}

Params::Params(double p, double q) : p_(p), q_(q) {
    if (!std::isfinite(p) || !std::isfinite(q) || !(p > 1.0) || !(q > 1.0)) {
        throw DomainError("exponents must satisfy 1 < p, q < inf (got p=" + std::to_string(p) +
                          ", q=" + std::to_string(q) + ")");
    }
}

GenTrig::GenTrig(Params params, Accuracy acc)
    : params_(params),
      acc_(acc),
      inv_p_(1.0 / params.p()),
      inv_q_(1.0 / params.q()),
      beta_b_(1.0 - 1.0 / params.p()) {
    acc_.validate();
    s_mid_ = std::pow(0.5, inv_q_);
    t_mid_ = std::pow(0.5, beta_b_);
    y_mid_ = s_mid_ + lower_excess(s_mid_);
    half_pi_ = y_mid_ + upper_tail(t_mid_);
    pi_ = 2.0 * half_pi_;
}

// F(s) - s from the binomial series of (1 - t^q)^{-1/p}; needs s^q <= 1/2.
double GenTrig::lower_excess(double s) const {
    if (s == 0.0) return 0.0;
    const double x = std::pow(s, params_.q());
    double coef = 1.0;
    double xk = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 400; ++k) {
        coef *= (inv_p_ + (k - 1)) / k;
        xk *= x;
        const double term = coef * xk / (params_.q() * k + 1.0);
        sum += term;
        if (term <= kEps * 0.5 * sum) break;
    }
    return s * sum;
}

// F(1) - F(s) expressed through t = w^{1 - 1/p}, w = 1 - s^q.
double GenTrig::upper_tail(double t) const {
    if (t == 0.0) return 0.0;
    const double w = std::pow(t, 1.0 / beta_b_);
    const double cf = beta_cf(w, beta_b_, inv_q_, acc_);
    return t * std::exp(inv_q_ * std::log1p(-w)) * cf / (params_.q() * beta_b_);
}

double GenTrig::arcsin(double s) const {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw DomainError("arcsin_pq argument must lie in [0, 1]");
    }
    if (s == 0.0) return 0.0;
    if (s == 1.0) return half_pi_;
    const double x = std::pow(s, params_.q());
    if (x <= 0.5) return s + lower_excess(s);
    const double w = -std::expm1(params_.q() * std::log(s));
    return half_pi_ - upper_tail(std::pow(w, beta_b_));
}

ReducedArg GenTrig::reduce(double x) const {
    if (!std::isfinite(x)) throw DomainError("argument must be finite");
    ReducedArg out;
    const double period = 2.0 * pi_;
    double r = std::fabs(x);
    if (r >= period) {
        r -= period * std::floor(r / period);
        if (r < 0.0) r = 0.0;
        if (r >= period) r -= period;
    }
    if (x < 0.0) out.sign = -1;
    if (r > pi_) {
        // anti-periodicity: S(x + pi) = -S(x), S'(x + pi) = -S'(x)
        r -= pi_;
        out.sign = -out.sign;
        out.deriv_sign = -out.deriv_sign;
    }
    if (r > half_pi_) {
        r = pi_ - r;
        out.deriv_sign = -out.deriv_sign;
    }
    out.y = std::clamp(r, 0.0, half_pi_);
    return out;
}

QuarterPoint GenTrig::solve_lower(double y) const {
    if (y == 0.0) return {0.0, 1.0};
    const double q = params_.q();
    double lo = 0.0;
    double hi = std::min(1.0, s_mid_ * (1.0 + 1e-9));
    // F(s) >= s and F is convex, so s = y starts to the right of the root
    // and Newton descends monotonically.
    double s = std::min(y, hi);
    double r = 0.0;
    bool done = false;
    for (int it = 0; it < acc_.max_iter; ++it) {
        r = (s - y) + lower_excess(s);
        if (r == 0.0) {
            done = true;
            break;
        }
        if (r > 0.0) hi = s; else lo = s;
        const double w = -std::expm1(q * std::log(s));
        const double ds = r * std::pow(w, inv_p_);
        if (std::fabs(ds) <= 2.0 * kEps * s) {
            s -= ds;
            done = true;
            break;
        }
        double next = s - ds;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        s = next;
        if (hi - lo <= 2.0 * kEps * hi) {
            done = true;
            break;
        }
    }
    if (!done && std::fabs(r) > acc_.abs_tol) throw_no_convergence("sin_pq", acc_.max_iter);
    return {s, -std::expm1(q * std::log(s))};
}

QuarterPoint GenTrig::solve_upper(double delta) const {
    if (delta <= 0.0) return {1.0, 0.0};
    const double slope0 = params_.q() * beta_b_;  // dt/dG at t = 0
    double lo = 0.0;
    double hi = std::min(1.0, t_mid_ * (1.0 + 1e-9));
    double t = std::min(slope0 * delta, hi);
    double dt_old = hi - lo;
    double r = 0.0;
    bool done = false;
    for (int it = 0; it < acc_.max_iter; ++it) {
        r = upper_tail(t) - delta;
        if (r == 0.0) {
            done = true;
            break;
        }
        if (r > 0.0) hi = t; else lo = t;
        const double w = std::pow(t, 1.0 / beta_b_);
        const double deriv = std::exp((inv_q_ - 1.0) * std::log1p(-w)) / slope0;
        const double dt = r / deriv;
        if (std::fabs(dt) <= 2.0 * kEps * t) {
            t -= dt;
            done = true;
            break;
        }
        double next = t - dt;
        if (!(next > lo && next < hi) || std::fabs(2.0 * r) > std::fabs(dt_old * deriv)) {
            next = 0.5 * (lo + hi);
        }
        dt_old = std::fabs(next - t);
        t = next;
        if (hi - lo <= 2.0 * kEps * hi) {
            done = true;
            break;
        }
    }
    if (!done && std::fabs(r) > acc_.abs_tol) throw_no_convergence("sin_pq", acc_.max_iter);
    const double w = std::pow(t, 1.0 / beta_b_);
    return {std::exp(inv_q_ * std::log1p(-w)), w};
}

QuarterPoint GenTrig::quarter(double y) const {
    if (!(y >= 0.0 && y <= half_pi_)) {
        throw DomainError("quarter-period argument outside [0, pi_pq/2]");
    }
    if (y <= y_mid_) return solve_lower(y);
    return solve_upper(half_pi_ - y);
}

double GenTrig::sin(double x) const {
    const ReducedArg ra = reduce(x);
    return ra.sign * quarter(ra.y).s;
}

double GenTrig::cos(double x) const {
    const ReducedArg ra = reduce(x);
    return ra.deriv_sign * abs_pow(quarter(ra.y).w, inv_p_);
}

double GenTrig::sin_dd(double x) const {
    const ReducedArg ra = reduce(x);
    const double p = params_.p();
    const double q = params_.q();
    if (p > 2.0 && std::fabs(ra.y - half_pi_) <= kSingularWindow) {
        throw SingularPointError("sin_pq'' does not exist at odd multiples of pi_pq/2 when p > 2");
    }
    const QuarterPoint qp = quarter(ra.y);
    const double mag = (q / p) * abs_pow(qp.s, q - 1.0) * abs_pow(qp.w, (2.0 - p) / p);
    return -ra.sign * mag;
}

double GenTrig::sin_ratio(double x) const {
    if (std::fabs(x) < kSeriesRatioRadius) return series_ratio(x, params_);
    return sin(x) / x;
}

double GenTrig::sin_defect(double x) const {
    if (!(x > 0.0 && x <= pi_)) throw DomainError("sin_defect needs x in (0, pi_pq]");
    if (x > y_mid_) return x - sin(x);
    // x - S(x) is the fixed point of D = E(x - D), E(s) = F(s) - s.
    double d = lower_excess(x);
    for (int it = 0; it < 100; ++it) {
        const double next = lower_excess(x - d);
        const double change = std::fabs(next - d);
        d = next;
        if (change <= kEps * d) break;
    }
    return d;
}

double GenTrig::cos_defect(double x) const {
    const ReducedArg ra = reduce(x);
    const QuarterPoint qp = quarter(ra.y);
    if (ra.deriv_sign < 0) return 1.0 + abs_pow(qp.w, inv_p_);
    if (qp.w == 0.0) return 1.0;
    const double sq = std::pow(qp.s, params_.q());
    const double log_w = sq <= 0.5 ? std::log1p(-sq) : std::log(qp.w);
    return -std::expm1(log_w * inv_p_);
}

double pi_pq(const Params& params) { return GenTrig(params).pi(); }

double arcsin_pq(double s, const Params& params, const Accuracy& acc) {
    return GenTrig(params, acc).arcsin(s);
}

ReducedArg reduce_argument(double x, const Params& params) { return GenTrig(params).reduce(x); }

double sin_pq(double x, const Params& params, const Accuracy& acc) {
    return GenTrig(params, acc).sin(x);
}

double cos_pq(double x, const Params& params, const Accuracy& acc) {
    return GenTrig(params, acc).cos(x);
}

double sin_pq_dd(double x, const Params& params, const Accuracy& acc) {
    return GenTrig(params, acc).sin_dd(x);
}

}  // namespace gtrig
