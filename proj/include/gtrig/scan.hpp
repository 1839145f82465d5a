#pragma once

// Grid scans of sin_{p,q}(x)/x against the candidate bounds, and their CSV
// form:
//
//   x,sin_ratio,lower,qpower,upper,margin
//
// One record per line, '\n' terminated, 17 significant digits, '.' decimal
// separator regardless of locale. `upper` is empty unless q == 2 and p >= 2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtrig/core.hpp"

namespace gtrig {

struct ScanRecord {
    double x = 0.0;
    double sin_ratio = 0.0;
    double lower = 0.0;
    double qpower = 0.0;
    std::optional<double> upper;
    double margin = 0.0;  ///< sin_ratio - lower

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

inline constexpr std::string_view kScanHeader = "x,sin_ratio,lower,qpower,upper,margin";

/// n records at from + (to - from) i / (n - 1), i = 0..n-1.
/// Throws DomainError unless from < to and n >= 2.
std::vector<ScanRecord> scan(const Params& params, double from, double to, int n,
                             const Accuracy& acc = {});

std::string render_csv(const std::vector<ScanRecord>& records);

/// Inverse of render_csv. Throws DomainError on a malformed document.
std::vector<ScanRecord> parse_csv(std::string_view text);

/// Shortest decimal rendering with 17 significant digits, "%.17g" style.
std::string format_real(double v);

}  // namespace gtrig
