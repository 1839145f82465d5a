#pragma once

// Named verification suites run by `gtrig verify`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtrig/redheffer.hpp"

namespace gtrig {

enum class Suite { redheffer, upper, cos, conditions, multiple_angle, ode, series };

std::optional<Suite> suite_from_name(std::string_view name);
std::string to_string(Suite suite);

struct SuiteResult {
    Suite suite = Suite::redheffer;
    bool pass = false;
    std::string metric_name;
    double metric = 0.0;
    /// Multi-line human-readable summary, no trailing newline.
    std::string detail;
    std::vector<Counterexample> violations;
};

/// Runs one suite on an n-point grid.
///
///   redheffer       pi_{p,q} bound on [0.01, 4 pi_{p,q}]; needs p, q >= 2
///   upper           two-sided sin_{p,2} estimate on [0.01, pi - 0.01]; needs q = 2, p >= 2
///   cos             cosine corollary for q on [0.01, pi_{q*,q} - 0.01]; needs q >= 2, p unused
///   conditions      structural conditions on [0, pi_{p,q}]
///   multiple-angle  multiple-angle identity for q on [0, pi_{q*,q}/2]; p unused
///   ode             p-Laplacian IVP against sin_{p,q} on [0, pi_{p,q}], step pi / max(n, 2000)
///   series          three-term expansion remainder order and agreement at 0.05
///
/// Throws RegimeError when the parameters fall outside a suite's hypothesis.
SuiteResult run_suite(Suite suite, const Params& params, int n, const Accuracy& acc = {});

/// Tolerances applied by run_suite.
inline constexpr double kEqualityTolerance = 1e-10;
inline constexpr double kS4Tolerance = 1e-9;
inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kConstantTolerance = 1e-10;
inline constexpr double kOdeTolerance = 1e-6;
inline constexpr double kEnergyTolerance = 1e-8;
inline constexpr double kSeriesMatchTolerance = 1e-8;

/// |sin_{p,q}(x) - series3(x)|.
double series_remainder(double x, const Params& params, const Accuracy& acc = {});

}  // namespace gtrig
