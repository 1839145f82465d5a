#pragma once

// Direct numerical integration used as an independent check on the
// closed-form / continued-fraction paths of the library.

#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

// int_0^s (1 - t^q)^{-1/p} dt. The two-argument integrand receives the
// distance to the nearer endpoint, so 1 - t^q stays accurate near t = 1.
inline double arcsin_integral(double s, double p, double q) {
    boost::math::quadrature::tanh_sinh<double> ts;
    auto f = [&](double t, double tc) {
        const double w = (t > 0.5 * s && s == 1.0) ? -std::expm1(q * std::log1p(-tc))
                                                     : -std::expm1(q * std::log(t));
        return std::pow(w, -1.0 / p);
    };
    return ts.integrate(f, 0.0, s, 1e-15);
}

inline double pi_integral(double p, double q) { return 2.0 * arcsin_integral(1.0, p, q); }

// int_0^x t^{a-1} (1 - t)^{b-1} dt
inline double inc_beta_integral(double x, double a, double b) {
    boost::math::quadrature::tanh_sinh<double> ts;
    auto f = [&](double t) { return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0); };
    return ts.integrate(f, 0.0, x, 1e-15);
}

}  // namespace oracle
