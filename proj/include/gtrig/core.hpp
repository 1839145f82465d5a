#pragma once

// Generalized trigonometric functions sin_{p,q}, cos_{p,q} and the constant
// pi_{p,q}.
//
//   F_{p,q}(s) = int_0^s (1 - t^q)^{-1/p} dt,   s in [0, 1]
//   sin_{p,q}  = F_{p,q}^{-1} on [0, pi_{p,q}/2], pi_{p,q} = 2 F_{p,q}(1)
//
// extended to (pi/2, pi] by reflection and to the real line as the odd
// 2 pi_{p,q}-periodic continuation. cos_{p,q} is the derivative and obeys
// |cos|^p + |sin|^q = 1.

#include "gtrig/special_fn.hpp"

namespace gtrig {

/// Exponent pair (p, q) with 1 < p, q < inf.
class Params {
public:
    /// Throws DomainError unless both exponents are finite and > 1.
    Params(double p, double q);

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

    /// Hoelder conjugate of p, p / (p - 1).
    double conjugate_p() const noexcept { return p_ / (p_ - 1.0); }
    /// Hoelder conjugate of q, q / (q - 1).
    double conjugate_q() const noexcept { return q_ / (q_ - 1.0); }

    /// True when 2 <= p and 2 <= q.
    bool theorem_regime() const noexcept { return p_ >= 2.0 && q_ >= 2.0; }

    friend bool operator==(const Params&, const Params&) = default;

private:
    double p_;
    double q_;
};

/// Argument folded into the first quarter period.
///
/// sin(x) = sign * sin(y), cos(x) = deriv_sign * cos(y), 0 <= y <= pi/2.
struct ReducedArg {
    double y = 0.0;
    int sign = 1;
    int deriv_sign = 1;
};

/// Value of sin_{p,q} on the first quarter together with its complement.
///
/// w = 1 - s^q = |cos|^p is carried separately so that cos stays accurate
/// where s rounds to 1.
struct QuarterPoint {
    double s = 0.0;
    double w = 1.0;
};

/// Evaluator bound to one exponent pair. Immutable after construction.
class GenTrig {
public:
    explicit GenTrig(Params params, Accuracy acc = {});

    const Params& params() const noexcept { return params_; }
    const Accuracy& accuracy() const noexcept { return acc_; }

    /// pi_{p,q} = (2/q) B(1/q, 1 - 1/p), evaluated as 2 F(1) from the two
    /// pieces used for inversion (accurate to about 1 ulp).
    double pi() const noexcept { return pi_; }
    double half_pi() const noexcept { return half_pi_; }

    /// F_{p,q}(s) for s in [0, 1].
    double arcsin(double s) const;

    ReducedArg reduce(double x) const;

    /// Solve F_{p,q}(s) = y for y in [0, pi/2].
    QuarterPoint quarter(double y) const;

    double sin(double x) const;
    double cos(double x) const;

    /// sin''(x) = -(q/p) sin^{q-1} |cos|^{2-p}. For p > 2 this throws
    /// SingularPointError within 1e-12 of an odd multiple of pi/2.
    double sin_dd(double x) const;

    /// sin(x)/x, with the removable singularity at 0 filled in by the
    /// series for |x| < 1e-6.
    double sin_ratio(double x) const;

    /// x - sin(x) for x in (0, pi], computed without cancellation on the
    /// part of the first quarter where sin(x) ~ x.
    double sin_defect(double x) const;

    /// 1 - cos(x), accurate where cos(x) is close to 1.
    double cos_defect(double x) const;

private:
    double lower_excess(double s) const;
    double upper_tail(double t) const;
    QuarterPoint solve_lower(double y) const;
    QuarterPoint solve_upper(double delta) const;

    Params params_;
    Accuracy acc_;
    double inv_p_;
    double inv_q_;
    double beta_b_;   // 1 - 1/p
    double pi_;
    double half_pi_;
    double s_mid_;    // s with s^q = 1/2; the two inversion regimes meet here
    double t_mid_;    // (1/2)^{1 - 1/p}
    double y_mid_;    // F(s_mid)
};

double pi_pq(const Params& params);
double arcsin_pq(double s, const Params& params, const Accuracy& acc = {});
ReducedArg reduce_argument(double x, const Params& params);
double sin_pq(double x, const Params& params, const Accuracy& acc = {});
double cos_pq(double x, const Params& params, const Accuracy& acc = {});
double sin_pq_dd(double x, const Params& params, const Accuracy& acc = {});

/// sign(z) |z|^e with 0 mapped to 0 for e > 0 and to 1 for e == 0.
double signed_pow(double z, double e);

/// |z|^e with the same zero conventions as signed_pow.
double abs_pow(double z, double e);

}  // namespace gtrig
