#pragma once

// Independent route to sin_{p,q}: the p-Laplacian initial value problem
//
//   -(|u'|^{p-2} u')' = ((p-1) q / p) |u|^{q-2} u,   u(0) = 0, u'(0) = 1,
//
// integrated as a first-order system in (u, w), w = |u'|^{p-2} u':
//
//   u' = |w|^{p'-2} w,   w' = -((p-1) q / p) |u|^{q-2} u,   p' = p / (p-1).

#include <vector>

#include "gtrig/core.hpp"

namespace gtrig {

struct IvpSample {
    double x = 0.0;
    double u = 0.0;
    double w = 0.0;
};

struct IvpPath {
    double step = 0.0;
    std::vector<IvpSample> samples;
};

/// Fixed-step classical RK4 on [0, x_end].
///
/// The step actually used is x_end / N with N = ceil(x_end / step), so the
/// last sample sits exactly on x_end. Steps within 8 steps of a zero of u
/// or w are recomputed with 1024 uniform sub-steps, and sub-steps near the
/// zero once more the same way: the right-hand side is not smooth there
/// unless p' - 1 and q - 1 are integers. Samples stay on the uniform grid.
///
/// Throws DomainError unless 0 < x_end <= 2 pi_{p,q} and
/// 0 < step <= pi_{p,q} / 100.
IvpPath solve_ivp(const Params& params, double x_end, double step);

/// u' recovered from the flux variable, |w|^{p'-2} w.
double ivp_derivative(double w, const Params& params);

/// |u'|^p + |u|^q - 1 at one sample.
double energy_defect(const IvpSample& sample, const Params& params);

/// Largest |energy_defect| along the path.
double max_energy_defect(const IvpPath& path, const Params& params);

}  // namespace gtrig
