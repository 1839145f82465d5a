#include "gtrig/ode_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "gtrig/errors.hpp"

namespace gtrig {

namespace {

constexpr int kCrossingSubsteps = 1024;
// Steps closer than this many steps to a zero of u or w are sub-stepped.
constexpr double kZeroWindowSteps = 8.0;
constexpr int kRefineDepth = 2;

struct State {
    double u;
    double w;
};

struct Rhs {
    double flux_exp;  // p' - 1
    double q_exp;     // q - 1
    double gain;      // (p - 1) q / p

    State operator()(const State& s) const {
        return {signed_pow(s.w, flux_exp), -gain * signed_pow(s.u, q_exp)};
    }
};

State rk4(const Rhs& f, const State& s, double h) {
    const State k1 = f(s);
    const State k2 = f({s.u + 0.5 * h * k1.u, s.w + 0.5 * h * k1.w});
    const State k3 = f({s.u + 0.5 * h * k2.u, s.w + 0.5 * h * k2.w});
    const State k4 = f({s.u + h * k3.u, s.w + h * k3.w});
    return {s.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
            s.w + h / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w)};
}

bool sign_changed(double a, double b) { return a == 0.0 || b == 0.0 || (a < 0.0) != (b < 0.0); }

// v or its RK4 successor lies within kZeroWindowSteps steps of a zero.
bool near_zero(double v, double v_next, double slope, double h) {
    const double reach = kZeroWindowSteps * h * std::fabs(slope);
    return sign_changed(v, v_next) || std::fabs(v) <= reach || std::fabs(v_next) <= reach;
}

// One step of size h; steps near a zero are split into kCrossingSubsteps
// pieces, recursively up to `depth` levels.
State advance(const Rhs& f, const State& s, double h, int depth) {
    State next = rk4(f, s, h);
    if (depth == 0) return next;
    const State slope = f(s);
    if (!near_zero(s.u, next.u, slope.u, h) && !near_zero(s.w, next.w, slope.w, h)) return next;
    const double hs = h / kCrossingSubsteps;
    next = s;
    for (int j = 0; j < kCrossingSubsteps; ++j) next = advance(f, next, hs, depth - 1);
    return next;
}

}  // namespace

double ivp_derivative(double w, const Params& params) {
    return signed_pow(w, params.conjugate_p() - 1.0);
}

IvpPath solve_ivp(const Params& params, double x_end, double step) {
    const double pi = pi_pq(params);
    if (!(x_end > 0.0) || x_end > 2.0 * pi * (1.0 + 1e-12)) {
        throw DomainError("solve_ivp: x_end must lie in (0, 2 pi_pq]");
    }
    if (!(step > 0.0) || step > pi / 100.0 * (1.0 + 1e-12)) {
        throw DomainError("solve_ivp: step must lie in (0, pi_pq / 100]");
    }

    const Rhs f{params.conjugate_p() - 1.0, params.q() - 1.0,
                (params.p() - 1.0) * params.q() / params.p()};
    const auto n = static_cast<std::size_t>(std::ceil(x_end / step - 1e-9));
    const double h = x_end / static_cast<double>(n);

    IvpPath path;
    path.step = h;
    path.samples.reserve(n + 1);
    path.samples.push_back({0.0, 0.0, 1.0});

    State s{0.0, 1.0};
    for (std::size_t k = 1; k <= n; ++k) {
        s = advance(f, s, h, kRefineDepth);
        const double x = k == n ? x_end : static_cast<double>(k) * h;
        path.samples.push_back({x, s.u, s.w});
    }
    return path;
}

double energy_defect(const IvpSample& sample, const Params& params) {
    // |u'|^p = |w|^{p'}
    return abs_pow(sample.w, params.conjugate_p()) + abs_pow(sample.u, params.q()) - 1.0;
}

double max_energy_defect(const IvpPath& path, const Params& params) {
    double worst = 0.0;
    for (const auto& s : path.samples) worst = std::max(worst, std::fabs(energy_defect(s, params)));
    return worst;
}

}  // namespace gtrig
