#include "gtrig/series.hpp"

#include <cmath>

namespace gtrig {

SeriesCoeffs series_coeffs(const Params& params) {
    const double p = params.p();
    const double q = params.q();
    SeriesCoeffs c;
    c.c1 = 1.0 / (p * (q + 1.0));
    c.c2 = (1.0 - p + 3.0 * q - p * q) / (2.0 * p * p * (q + 1.0) * (2.0 * q + 1.0));
    return c;
}

namespace {

// -c1 a + c2 a^2 with a = |x|^q
double correction(double x, const Params& params) {
    const SeriesCoeffs c = series_coeffs(params);
    const double a = std::pow(std::fabs(x), params.q());
    return a * (c.c2 * a - c.c1);
}

}  // namespace

double series3(double x, const Params& params) {
    if (x == 0.0) return x;
    return x + x * correction(x, params);
}

double series_ratio(double x, const Params& params) {
    if (x == 0.0) return 1.0;
    return 1.0 + correction(x, params);
}

bool series_in_regime(double x, const Params& params) {
    return std::fabs(x) <= 0.25 * pi_pq(params);
}

}  // namespace gtrig
