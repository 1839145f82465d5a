// gtrig: command-line front end over the C API in gtrig.h.
//
//   gtrig pi             --p P --q Q [--tol T]
//   gtrig eval           --fn {sin,cos,sin-dd,series3,arcsin} --p P --q Q --x X [--tol T]
//   gtrig scan           --p P --q Q --from A --to B [--n N] [--out FILE] [--tol T]
//   gtrig verify         --suite NAME --p P --q Q [--n N] [--tol T]
//   gtrig counterexample --p P --q Q [--tol T]
//
// Exit codes: 0 success/PASS, 1 FAIL or nothing found, 2 usage, domain or
// regime error, 3 singular evaluation, 4 I/O error.

#include <cstdio>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "gtrig.h"

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kSingular = 3, kIo = 4 };

int exit_for(gtrig_status st) {
    switch (st) {
        case GTRIG_OK: return kOk;
        case GTRIG_E_DOMAIN:
        case GTRIG_E_REGIME:
        case GTRIG_E_INVALID: return kUsage;
        case GTRIG_E_SINGULAR: return kSingular;
        case GTRIG_E_IO: return kIo;
        default: return kFail;
    }
}

int report_error(gtrig_status st) {
    std::fprintf(stderr, "gtrig: %s: %s\n", gtrig_status_string(st), gtrig_last_error());
    return exit_for(st);
}

struct Common {
    double p = 0.0;
    double q = 0.0;
    double tol = 0.0;  // 0 keeps the library defaults
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--p", c.p, "exponent p > 1")->required();
    cmd->add_option("--q", c.q, "exponent q > 1")->required();
    cmd->add_option("--tol", c.tol, "absolute and relative tolerance");
}

// Owns a context for the lifetime of one command.
class Context {
public:
    explicit Context(const Common& c) {
        gtrig_accuracy acc = gtrig_default_accuracy();
        if (c.tol > 0.0) acc.abs_tol = acc.rel_tol = c.tol;
        status_ = gtrig_ctx_create(c.p, c.q, &acc, &ctx_);
    }
    ~Context() { gtrig_ctx_destroy(ctx_); }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    gtrig_status status() const { return status_; }
    const gtrig_ctx* get() const { return ctx_; }

private:
    gtrig_ctx* ctx_ = nullptr;
    gtrig_status status_ = GTRIG_OK;
};

int cmd_pi(const Common& c) {
    Context ctx(c);
    if (ctx.status() != GTRIG_OK) return report_error(ctx.status());
    double v = 0.0;
    if (const auto st = gtrig_pi(ctx.get(), &v); st != GTRIG_OK) return report_error(st);
    std::printf("%.15g\n", v);
    return kOk;
}

int cmd_eval(const Common& c, gtrig_fn fn, double x) {
    Context ctx(c);
    if (ctx.status() != GTRIG_OK) return report_error(ctx.status());
    if (fn == GTRIG_FN_SERIES3) {
        double pi = 0.0;
        gtrig_pi(ctx.get(), &pi);
        if (!(x >= -0.25 * pi && x <= 0.25 * pi)) {
            std::fprintf(stderr, "gtrig: warning: |x| > pi_pq/4, outside the range of the expansion\n");
        }
    }
    double v = 0.0;
    if (const auto st = gtrig_eval(ctx.get(), fn, x, &v); st != GTRIG_OK) return report_error(st);
    std::printf("%.15g\n", v);
    return kOk;
}

int cmd_scan(const Common& c, double from, double to, int n, const std::string& out) {
    Context ctx(c);
    if (ctx.status() != GTRIG_OK) return report_error(ctx.status());
    if (!out.empty()) {
        const auto st = gtrig_scan_write(ctx.get(), from, to, n, out.c_str());
        return st == GTRIG_OK ? kOk : report_error(st);
    }
    char* csv = nullptr;
    if (const auto st = gtrig_scan_csv(ctx.get(), from, to, n, &csv); st != GTRIG_OK) return report_error(st);
    const bool ok = std::fputs(csv, stdout) >= 0 && std::fflush(stdout) == 0;
    gtrig_string_free(csv);
    if (!ok) {
        std::fprintf(stderr, "gtrig: i/o error: cannot write to stdout\n");
        return kIo;
    }
    return kOk;
}

int cmd_verify(const Common& c, const std::string& suite_name, int n) {
    gtrig_suite suite{};
    if (gtrig_suite_from_name(suite_name.c_str(), &suite) != GTRIG_OK) {
        std::fprintf(stderr, "gtrig: unknown suite '%s'\n", suite_name.c_str());
        return kUsage;
    }
    Context ctx(c);
    if (ctx.status() != GTRIG_OK) return report_error(ctx.status());
    gtrig_report* rep = nullptr;
    if (const auto st = gtrig_verify(ctx.get(), suite, n, &rep); st != GTRIG_OK) return report_error(st);
    const bool pass = gtrig_report_passed(rep) != 0;
    std::printf("%s\n", gtrig_report_text(rep));
    std::printf("%s = %.6e\n", gtrig_report_metric_name(rep), gtrig_report_metric(rep));
    const int nv = gtrig_report_violation_count(rep);
    for (int i = 0; i < nv && i < 10; ++i) {
        gtrig_counterexample ce{};
        gtrig_report_violation(rep, i, &ce);
        std::printf("violation x=%.17g lhs=%.17g rhs=%.17g margin=%.6e\n", ce.x, ce.lhs, ce.rhs, ce.margin);
    }
    if (nv > 10) std::printf("... %d more violation(s)\n", nv - 10);
    std::printf("%s\n", pass ? "PASS" : "FAIL");
    gtrig_report_destroy(rep);
    return pass ? kOk : kFail;
}

int cmd_counterexample(const Common& c) {
    Context ctx(c);
    if (ctx.status() != GTRIG_OK) return report_error(ctx.status());
    gtrig_counterexample ce{};
    const auto st = gtrig_find_qpower_counterexample(ctx.get(), &ce);
    if (st == GTRIG_E_NOT_FOUND) {
        std::printf("none found\n");
        return kFail;
    }
    if (st != GTRIG_OK) return report_error(st);
    std::printf("x=%.17g\nlhs=%.17g\nrhs=%.17g\nmargin=%.17g\n", ce.x, ce.lhs, ce.rhs, ce.margin);
    if (ce.has_crossing) std::printf("crossing=%.17g\n", ce.crossing);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized trigonometric functions sin_pq, cos_pq, pi_pq and Redheffer-type bounds"};
    app.require_subcommand(1);

    Common common;
    double x = 0.0, from = 0.0, to = 0.0;
    int n = 500;
    std::string out, suite;
    gtrig_fn fn = GTRIG_FN_SIN;
    const std::map<std::string, gtrig_fn> fns{{"sin", GTRIG_FN_SIN},
                                              {"cos", GTRIG_FN_COS},
                                              {"sin-dd", GTRIG_FN_SIN_DD},
                                              {"series3", GTRIG_FN_SERIES3},
                                              {"arcsin", GTRIG_FN_ARCSIN}};

    auto* pi = app.add_subcommand("pi", "print pi_pq");
    add_common(pi, common);

    auto* eval = app.add_subcommand("eval", "evaluate one function at x");
    add_common(eval, common);
    eval->add_option("--fn", fn, "function")->required()->transform(CLI::CheckedTransformer(fns));
    eval->add_option("--x", x, "argument")->required();

    auto* scan = app.add_subcommand("scan", "CSV of sin_pq(x)/x against the bounds");
    add_common(scan, common);
    scan->add_option("--from", from, "first abscissa")->required();
    scan->add_option("--to", to, "last abscissa")->required();
    scan->add_option("--n", n, "number of grid points")->capture_default_str();
    scan->add_option("--out", out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, common);
    verify->add_option("--suite", suite,
                       "redheffer, upper, cos, conditions, multiple-angle, ode or series")->required();
    verify->add_option("--n", n, "number of grid points")->capture_default_str();

    auto* cex = app.add_subcommand("counterexample", "locate a violation of the q-power bound");
    add_common(cex, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (pi->parsed()) return cmd_pi(common);
    if (eval->parsed()) return cmd_eval(common, fn, x);
    if (scan->parsed()) return cmd_scan(common, from, to, n, out);
    if (verify->parsed()) return cmd_verify(common, suite, n);
    return cmd_counterexample(common);
}
