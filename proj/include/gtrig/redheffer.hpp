#pragma once

// Redheffer-type bounds for sin_{p,q}, the quantities used to prove them,
// and grid checkers that test them numerically.
//
// For an odd, anti-periodic S with anti-period a, 0 < S(x) < x on (0, a) and
// S'^2 - S'' S >= 1 off a finite set P, the bound
//
//   (a^2 - x^2) / (a^2 + x^2) <= S(x) / x,   x != 0,
//
// holds. sin_{p,q} meets those conditions with a = pi_{p,q} and
// P = {pi_{p,q}/2} whenever p, q >= 2.
//
// Grid checks cannot prove anything. Reports say whether the samples are
// consistent with a bound.

#include <optional>
#include <string>
#include <vector>

#include "gtrig/core.hpp"

namespace gtrig {

/// Grid points at or below this margin count as violations.
inline constexpr double kStrictnessTolerance = 1e-12;

/// Default half-width of the windows removed around excluded points.
inline constexpr double kDefaultExclusionRadius = 1e-6;

/// n equally spaced samples from lo to hi inclusive. Points closer than
/// exclusion_radius to a checker's excluded abscissae are skipped.
struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    int n = 2;
    double exclusion_radius = kDefaultExclusionRadius;

    /// Throws DomainError unless lo < hi, n >= 2 and exclusion_radius >= 0.
    void validate() const;
    double at(int i) const;
};

/// A point where a candidate bound fails: margin = rhs - lhs <= 0.
struct Counterexample {
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

struct InequalityReport {
    Params params;
    GridSpec grid;
    std::string bound;
    /// Minimum of rhs - lhs over the grid, equality points excluded.
    double min_margin = 0.0;
    double argmin_x = 0.0;
    std::vector<Counterexample> violations;
    /// At least one point evaluated and none with margin <= -kStrictnessTolerance.
    bool holds = false;
    int evaluated = 0;
};

/// Outcome of checking an identity: defects are |lhs - rhs|.
struct IdentityReport {
    double q = 0.0;
    GridSpec grid;
    double max_defect = 0.0;
    double argmax_x = 0.0;
    /// |pi_{2,q} - 2^{2/q-1} pi_{q*,q}|
    double constant_defect = 0.0;
    int evaluated = 0;
};

struct ConditionReport {
    /// max |S(-x) + S(x)| and |S(x + a) + S(x)| over the grid.
    double s1_max_defect = 0.0;
    /// 0 < S(x) < x at every grid point in (0, a).
    bool s2_holds = false;
    /// One-sided difference quotients of S at a/2 and a human-readable summary.
    double s3_left_slope = 0.0;
    double s3_right_slope = 0.0;
    std::string s3_note;
    /// min of S'^2 - S'' S from the closed-form derivatives.
    double s4_min_value = 0.0;
    double s4_argmin_x = 0.0;
    /// Same minimum with S' and S'' taken from central differences of S.
    double s4_min_value_fd = 0.0;
    std::vector<double> excluded_points;
};

struct ProofQuantities {
    /// x^2 (x + S) / (x - S); strictly decreasing with limit a^2 at x = a.
    double f = 0.0;
    /// x + S - x^2 (1 + S') / S; positive on (0, a).
    double g = 0.0;
    /// S'^2 - S'' S; absent inside the singular window at a/2 when p > 2.
    std::optional<double> s4;
};

enum class BoundKind { eq_gri, q_power, upper_p2 };

std::string to_string(BoundKind kind);

/// (a^2 - x^2) / (a^2 + x^2)
double lower_bound(double x, double a);

/// (pi^q - |x|^q) / (pi^q + |x|^q) with pi = pi_{p,q}.
double qpower_bound(double x, const Params& params);

/// (6p - x^2) / (6p + x^2), the upper estimate for sin_{p,2} x / x.
/// Throws DomainError when p < 2.
double upper_bound_sin_p2(double x, double p);

/// lim_{x -> 0+} sin_{p,2}''(x) / x = -2/p. Throws DomainError when p < 2.
double d_limit(double p);

/// sin_{p,2}''(h) / h at small h, the numerical counterpart of d_limit.
double d_limit_numeric(double p, double h = 1e-3, const Accuracy& acc = {});

/// Grid check of the pi_{p,q} Redheffer bound. Throws RegimeError unless
/// p, q >= 2. Points within acc.abs_tol of +-pi_{p,q} are equality points.
InequalityReport check_theorem_gri2(const Params& params, const GridSpec& grid,
                                    const Accuracy& acc = {});

/// Same evaluation as the matching checker for any p, q > 1. Descriptive
/// only; never raises a regime error.
InequalityReport explore_inequality(const Params& params, const GridSpec& grid, BoundKind bound,
                                    const Accuracy& acc = {});

/// Where the q-power variant of the bound fails on (pi/2, pi).
struct QpowerViolation {
    /// Deepest violation found, refined by golden-section search.
    Counterexample deepest;
    /// First abscissa where the margin turns non-positive, refined by
    /// bisection. Absent when the margin is already negative at pi/2.
    std::optional<double> crossing;
};

/// Scans (pi/2, pi) at resolution 1e-3 pi for violations of the q-power
/// bound. Returns nullopt when none is found (e.g. q = 2, where the
/// variant coincides with the proven bound).
std::optional<QpowerViolation> find_qpower_counterexample(const Params& params,
                                                          const Accuracy& acc = {});

/// (pi^2 - x^2)/(pi^2 + x^2) < cos_{q*,q}(x/2)^{q*-1} with pi = pi_{q*,q}.
/// Throws RegimeError when q < 2 and DomainError if the grid leaves
/// [0, pi_{q*,q}].
InequalityReport check_cos_corollary(double q, const GridSpec& grid, const Accuracy& acc = {});

/// sin_{2,q}(2^{2/q} x) = 2^{2/q} sin_{q*,q}(x) cos_{q*,q}(x)^{q*-1} on
/// [0, pi_{q*,q}/2], plus the constant relation pi_{2,q} = 2^{2/q-1} pi_{q*,q}.
IdentityReport check_multiple_angle(double q, const GridSpec& grid, const Accuracy& acc = {});

/// f, g and S'^2 - S'' S at x in (0, pi_{p,q}) for S = sin_{p,q}.
ProofQuantities proof_quantities(double x, const Params& params, const Accuracy& acc = {});

/// Numerical status of the four structural conditions on the grid.
ConditionReport check_conditions(const Params& params, const GridSpec& grid,
                                 const Accuracy& acc = {});

/// (pi_{p,2}^2 - x^2)/(pi_{p,2}^2 + x^2) < sin_{p,2}(x)/x < (6p - x^2)/(6p + x^2).
/// Throws RegimeError when p < 2 and DomainError if the grid leaves
/// (0, pi_{p,2}).
InequalityReport check_upper_p2(double p, const GridSpec& grid, const Accuracy& acc = {});

/// (1 - q/p) t^2 + (q/p) t^{2-p} - 1, which equals S'^2 - S'' S - 1 at |S'| = t.
double s4_reduction(double t, const Params& params);

}  // namespace gtrig
