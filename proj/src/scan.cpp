#include "gtrig/scan.hpp"

#include <charconv>
#include <cmath>

#include "gtrig/errors.hpp"
#include "gtrig/redheffer.hpp"

namespace gtrig {

std::vector<ScanRecord> scan(const Params& params, double from, double to, int n, const Accuracy& acc) {
    GridSpec grid{from, to, n, 0.0};
    grid.validate();
    const GenTrig g(params, acc);
    const double pi = g.pi();
    const bool with_upper = params.q() == 2.0 && params.p() >= 2.0;

    std::vector<ScanRecord> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ScanRecord r;
        r.x = grid.at(i);
        r.sin_ratio = g.sin_ratio(r.x);
        r.lower = lower_bound(r.x, pi);
        r.qpower = params.q() == 2.0 ? r.lower
                                     : (std::pow(pi, params.q()) - std::pow(std::fabs(r.x), params.q())) /
                                           (std::pow(pi, params.q()) + std::pow(std::fabs(r.x), params.q()));
        if (with_upper) r.upper = upper_bound_sin_p2(r.x, params.p());
        r.margin = r.sin_ratio - r.lower;
        out.push_back(r);
    }
    return out;
}

std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string render_csv(const std::vector<ScanRecord>& records) {
    std::string out(kScanHeader);
    out += '\n';
    for (const auto& r : records) {
        out += format_real(r.x);
        out += ',';
        out += format_real(r.sin_ratio);
        out += ',';
        out += format_real(r.lower);
        out += ',';
        out += format_real(r.qpower);
        out += ',';
        if (r.upper) out += format_real(*r.upper);
        out += ',';
        out += format_real(r.margin);
        out += '\n';
    }
    return out;
}

namespace {

double parse_field(std::string_view field, std::size_t line) {
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw DomainError("scan CSV line " + std::to_string(line) + ": bad number '" +
                          std::string(field) + "'");
    }
    return v;
}

}  // namespace

std::vector<ScanRecord> parse_csv(std::string_view text) {
    std::vector<ScanRecord> out;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) throw DomainError("scan CSV: missing final newline");
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (line_no == 1) {
            if (line != kScanHeader) throw DomainError("scan CSV: unexpected header");
            continue;
        }
        std::string_view fields[6];
        std::size_t start = 0;
        for (int f = 0; f < 6; ++f) {
            const std::size_t comma = line.find(',', start);
            if ((f < 5) == (comma == std::string_view::npos)) {
                throw DomainError("scan CSV line " + std::to_string(line_no) + ": expected 6 fields");
            }
            fields[f] = line.substr(start, f < 5 ? comma - start : std::string_view::npos);
            start = comma + 1;
        }
        ScanRecord r;
        r.x = parse_field(fields[0], line_no);
        r.sin_ratio = parse_field(fields[1], line_no);
        r.lower = parse_field(fields[2], line_no);
        r.qpower = parse_field(fields[3], line_no);
        if (!fields[4].empty()) r.upper = parse_field(fields[4], line_no);
        r.margin = parse_field(fields[5], line_no);
        out.push_back(r);
    }
    if (line_no == 0) throw DomainError("scan CSV: empty document");
    return out;
}

}  // namespace gtrig
