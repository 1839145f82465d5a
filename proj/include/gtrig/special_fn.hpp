#pragma once

// Gamma, beta and incomplete-beta kernel in double precision.

namespace gtrig {

/// Tolerances shared by the iterative kernels.
struct Accuracy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iter = 200;

    /// Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_iter >= 1.
    void validate() const;
};

/// log Gamma(x) for x > 0. Lanczos approximation with reflection below 1/2.
double ln_gamma(double x);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), formed in log space.
double beta(double a, double b);

/// Natural log of B(a, b).
double ln_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b).
///
/// Continued fraction with the usual switch to 1 - I_{1-x}(b, a) above
/// x = (a + 1) / (a + b + 2). Throws DomainError for arguments outside
/// [0, 1] x (0, inf)^2 and ConvergenceError if the fraction has not settled
/// within acc.max_iter terms.
double inc_beta_reg(double x, double a, double b, const Accuracy& acc = {});

/// Continued-fraction factor of the incomplete beta function.
///
/// B_x(a, b) = x^a (1 - x)^b / a * beta_cf(x, a, b). Converges for every
/// x in [0, 1); fastest below (a + 1) / (a + b + 2).
double beta_cf(double x, double a, double b, const Accuracy& acc = {});

}  // namespace gtrig
