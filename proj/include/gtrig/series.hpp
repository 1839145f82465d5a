#pragma once

// Three-term expansion of sin_{p,q} about the origin:
//
//   sin_{p,q} x = x - c1 |x|^q x + c2 |x|^{2q} x + O(|x|^{3q+1})

#include "gtrig/core.hpp"

namespace gtrig {

struct SeriesCoeffs {
    double c1 = 0.0;  ///< 1 / (p (q + 1))
    double c2 = 0.0;  ///< (1 - p + 3q - pq) / (2 p^2 (q + 1) (2q + 1))
};

SeriesCoeffs series_coeffs(const Params& params);

/// Truncated expansion. Meant for |x| <= pi_{p,q}/4 (see series_in_regime)
/// but evaluates anywhere.
double series3(double x, const Params& params);

/// series3(x) / x, i.e. 1 - c1 |x|^q + c2 |x|^{2q}; equals 1 at x = 0.
double series_ratio(double x, const Params& params);

/// |x| <= pi_{p,q}/4.
bool series_in_regime(double x, const Params& params);

}  // namespace gtrig
