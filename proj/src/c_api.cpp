#include "gtrig.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "gtrig/core.hpp"
#include "gtrig/errors.hpp"
#include "gtrig/redheffer.hpp"
#include "gtrig/scan.hpp"
#include "gtrig/series.hpp"
#include "gtrig/suites.hpp"

struct gtrig_ctx {
    gtrig::GenTrig trig;
};

struct gtrig_report {
    bool passed = false;
    double metric = 0.0;
    std::string metric_name;
    std::string text;
    std::vector<gtrig::Counterexample> violations;
};

namespace {

thread_local std::string g_last_error;

gtrig_status fail(gtrig_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `body`, translating library exceptions into status codes.
template <class Body>
gtrig_status guarded(Body&& body) {
    try {
        g_last_error.clear();
        body();
        return GTRIG_OK;
    } catch (const gtrig::SingularPointError& e) {
        return fail(GTRIG_E_SINGULAR, e.what());
    } catch (const gtrig::RegimeError& e) {
        return fail(GTRIG_E_REGIME, e.what());
    } catch (const gtrig::ConvergenceError& e) {
        return fail(GTRIG_E_CONVERGENCE, e.what());
    } catch (const gtrig::DomainError& e) {
        return fail(GTRIG_E_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(GTRIG_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(GTRIG_E_INTERNAL, e.what());
    } catch (...) {
        return fail(GTRIG_E_INTERNAL, "unknown error");
    }
}

gtrig::Accuracy to_accuracy(const gtrig_accuracy* acc) {
    gtrig::Accuracy a;
    if (acc) {
        a.abs_tol = acc->abs_tol;
        a.rel_tol = acc->rel_tol;
        a.max_iter = acc->max_iter;
    }
    return a;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size());
    out[s.size()] = '\0';
    return out;
}

}  // namespace

extern "C" {

const char* gtrig_version(void) { return "1.0.0"; }

const char* gtrig_last_error(void) { return g_last_error.c_str(); }

const char* gtrig_status_string(gtrig_status status) {
    switch (status) {
        case GTRIG_OK: return "ok";
        case GTRIG_E_DOMAIN: return "domain error";
        case GTRIG_E_CONVERGENCE: return "convergence error";
        case GTRIG_E_REGIME: return "regime error";
        case GTRIG_E_SINGULAR: return "singular point";
        case GTRIG_E_IO: return "i/o error";
        case GTRIG_E_NOT_FOUND: return "not found";
        case GTRIG_E_INVALID: return "invalid argument";
        case GTRIG_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

gtrig_accuracy gtrig_default_accuracy(void) {
    const gtrig::Accuracy a;
    return {a.abs_tol, a.rel_tol, a.max_iter};
}

gtrig_status gtrig_ctx_create(double p, double q, const gtrig_accuracy* acc, gtrig_ctx** out) {
    if (!out) return fail(GTRIG_E_INVALID, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new gtrig_ctx{gtrig::GenTrig(gtrig::Params(p, q), to_accuracy(acc))}; });
}

void gtrig_ctx_destroy(gtrig_ctx* ctx) { delete ctx; }

gtrig_status gtrig_pi(const gtrig_ctx* ctx, double* out) {
    if (!ctx || !out) return fail(GTRIG_E_INVALID, "null pointer");
    *out = ctx->trig.pi();
    return GTRIG_OK;
}

gtrig_status gtrig_eval(const gtrig_ctx* ctx, gtrig_fn fn, double x, double* out) {
    if (!ctx || !out) return fail(GTRIG_E_INVALID, "null pointer");
    return guarded([&] {
        const auto& t = ctx->trig;
        switch (fn) {
            case GTRIG_FN_SIN: *out = t.sin(x); return;
            case GTRIG_FN_COS: *out = t.cos(x); return;
            case GTRIG_FN_SIN_DD: *out = t.sin_dd(x); return;
            case GTRIG_FN_SERIES3: *out = gtrig::series3(x, t.params()); return;
            case GTRIG_FN_ARCSIN: *out = t.arcsin(x); return;
        }
        throw gtrig::DomainError("unknown function selector");
    });
}

gtrig_status gtrig_scan_csv(const gtrig_ctx* ctx, double from, double to, int n, char** out) {
    if (!ctx || !out) return fail(GTRIG_E_INVALID, "null pointer");
    *out = nullptr;
    return guarded([&] {
        const auto& t = ctx->trig;
        *out = dup_string(gtrig::render_csv(gtrig::scan(t.params(), from, to, n, t.accuracy())));
    });
}

gtrig_status gtrig_scan_write(const gtrig_ctx* ctx, double from, double to, int n, const char* path) {
    if (!ctx || !path) return fail(GTRIG_E_INVALID, "null pointer");
    std::string csv;
    const gtrig_status st = guarded([&] {
        const auto& t = ctx->trig;
        csv = gtrig::render_csv(gtrig::scan(t.params(), from, to, n, t.accuracy()));
    });
    if (st != GTRIG_OK) return st;
    std::FILE* f = std::fopen(path, "wb");
    if (!f) return fail(GTRIG_E_IO, std::string("cannot open '") + path + "' for writing");
    const bool ok = std::fwrite(csv.data(), 1, csv.size(), f) == csv.size();
    if (std::fclose(f) != 0 || !ok) return fail(GTRIG_E_IO, std::string("write to '") + path + "' failed");
    return GTRIG_OK;
}

void gtrig_string_free(char* s) { std::free(s); }

gtrig_status gtrig_suite_from_name(const char* name, gtrig_suite* out) {
    if (!name || !out) return fail(GTRIG_E_INVALID, "null pointer");
    const auto s = gtrig::suite_from_name(name);
    if (!s) return fail(GTRIG_E_INVALID, std::string("unknown suite '") + name + "'");
    *out = static_cast<gtrig_suite>(*s);
    return GTRIG_OK;
}

gtrig_status gtrig_verify(const gtrig_ctx* ctx, gtrig_suite suite, int n, gtrig_report** out) {
    if (!ctx || !out) return fail(GTRIG_E_INVALID, "null pointer");
    *out = nullptr;
    if (suite < GTRIG_SUITE_REDHEFFER || suite > GTRIG_SUITE_SERIES) {
        return fail(GTRIG_E_INVALID, "unknown suite");
    }
    return guarded([&] {
        const auto& t = ctx->trig;
        gtrig::SuiteResult r = gtrig::run_suite(static_cast<gtrig::Suite>(suite), t.params(), n, t.accuracy());
        *out = new gtrig_report{r.pass, r.metric, std::move(r.metric_name), std::move(r.detail),
                                std::move(r.violations)};
    });
}

gtrig_status gtrig_explore(const gtrig_ctx* ctx, gtrig_bound bound, double from, double to, int n,
                           gtrig_report** out) {
    if (!ctx || !out) return fail(GTRIG_E_INVALID, "null pointer");
    *out = nullptr;
    if (bound < GTRIG_BOUND_EQ_GRI || bound > GTRIG_BOUND_UPPER_P2) {
        return fail(GTRIG_E_INVALID, "unknown bound");
    }
    return guarded([&] {
        const auto& t = ctx->trig;
        gtrig::GridSpec grid{from, to, n};
        gtrig::InequalityReport rep =
            gtrig::explore_inequality(t.params(), grid, static_cast<gtrig::BoundKind>(bound), t.accuracy());
        char buf[256];
        std::snprintf(buf, sizeof buf, "bound %s: min margin %.6e at x=%.17g, %zu violation(s) in %d points",
                      rep.bound.c_str(), rep.min_margin, rep.argmin_x, rep.violations.size(), rep.evaluated);
        *out = new gtrig_report{rep.holds, rep.min_margin, "min_margin", buf, std::move(rep.violations)};
    });
}

int gtrig_report_passed(const gtrig_report* report) { return report && report->passed ? 1 : 0; }

double gtrig_report_metric(const gtrig_report* report) { return report ? report->metric : 0.0; }

const char* gtrig_report_metric_name(const gtrig_report* report) {
    return report ? report->metric_name.c_str() : "";
}

const char* gtrig_report_text(const gtrig_report* report) { return report ? report->text.c_str() : ""; }

int gtrig_report_violation_count(const gtrig_report* report) {
    return report ? static_cast<int>(report->violations.size()) : 0;
}

gtrig_status gtrig_report_violation(const gtrig_report* report, int index, gtrig_counterexample* out) {
    if (!report || !out) return fail(GTRIG_E_INVALID, "null pointer");
    if (index < 0 || index >= static_cast<int>(report->violations.size())) {
        return fail(GTRIG_E_INVALID, "violation index out of range");
    }
    const auto& v = report->violations[static_cast<std::size_t>(index)];
    *out = {v.x, v.lhs, v.rhs, v.margin, 0, 0.0};
    return GTRIG_OK;
}

void gtrig_report_destroy(gtrig_report* report) { delete report; }

gtrig_status gtrig_find_qpower_counterexample(const gtrig_ctx* ctx, gtrig_counterexample* out) {
    if (!ctx || !out) return fail(GTRIG_E_INVALID, "null pointer");
    std::optional<gtrig::QpowerViolation> found;
    const gtrig_status st = guarded([&] {
        found = gtrig::find_qpower_counterexample(ctx->trig.params(), ctx->trig.accuracy());
    });
    if (st != GTRIG_OK) return st;
    if (!found) return fail(GTRIG_E_NOT_FOUND, "no violation of the q-power bound on (pi/2, pi)");
    const auto& d = found->deepest;
    *out = {d.x, d.lhs, d.rhs, d.margin, found->crossing ? 1 : 0, found->crossing.value_or(0.0)};
    return GTRIG_OK;
}

}  // extern "C"
