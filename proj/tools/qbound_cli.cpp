// Command-line front-end over the qbound C API: certified error bounds,
// adaptive integration, identity verification, sharpness sweeps, and
// special means, with JSON or CSV output.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbound/qbound.h"
#include "record.hpp"

namespace {

struct ExprHandle {
    qb_expr* e = nullptr;
    ~ExprHandle() { qb_expr_free(e); }
    ExprHandle() = default;
    ExprHandle(const ExprHandle&) = delete;
    ExprHandle& operator=(const ExprHandle&) = delete;
};

struct CertifiedHandle {
    qb_certified* r = nullptr;
    ~CertifiedHandle() { qb_certified_free(r); }
};

struct SweepHandle {
    qb_sweep* s = nullptr;
    ~SweepHandle() { qb_sweep_free(s); }
};

int exitCodeFor(qb_status s) {
    switch (s) {
    case QB_OK: return 0;
    case QB_ERR_NOT_QUASICONVEX: return 3;
    case QB_ERR_NO_CONVERGENCE: return 4;
    default: return 2;
    }
}

int reportError(qb_status s) {
    // Syntax messages already carry their 0-based position.
    std::cerr << "error: " << qb_last_error_message() << "\n";
    return exitCodeFor(s);
}

int parseExpr(const std::string& text, ExprHandle& out) {
    qb_status s = qb_expr_parse(text.c_str(), &out.e);
    return s == QB_OK ? 0 : reportError(s);
}

// Either a named preset or an explicit (theta, lambda) pair.
struct ParamSpec {
    std::string rule;
    double theta = 0.0;
    double lambda = 0.0;
    bool theta_set = false;
    bool lambda_set = false;
};

int resolveParams(const ParamSpec& ps, double& theta, double& lambda) {
    if (!ps.rule.empty()) {
        qb_status s = qb_preset(ps.rule.c_str(), &theta, &lambda);
        return s == QB_OK ? 0 : reportError(s);
    }
    if (!ps.theta_set || !ps.lambda_set) {
        std::cerr << "error: provide either --rule or both --theta and --lambda\n";
        return 2;
    }
    theta = ps.theta;
    lambda = ps.lambda;
    return 0;
}

unsigned envThreadCap() {
    const char* v = std::getenv("QBOUND_THREADS");
    if (!v || !*v) return 0;
    char* end = nullptr;
    unsigned long n = std::strtoul(v, &end, 10);
    if (end == v || *end != '\0') return 0;
    return static_cast<unsigned>(std::min<unsigned long>(n, 1024));
}

void emit(const std::string& text) { std::cout << text << "\n"; }

// ---------------------------------------------------------------- bound

struct BoundOpts {
    std::string fn;
    double a = 0.0, b = 1.0;
    ParamSpec params;
    double q = 1.0;
    std::string format = "json";
    bool skip_qc = false;
};

int runBound(const BoundOpts& o) {
    ExprHandle f;
    if (int c = parseExpr(o.fn, f)) return c;
    double theta = 0.0, lambda = 0.0;
    if (int c = resolveParams(o.params, theta, lambda)) return c;

    qb_qc_report qc{};
    bool qc_checked = !o.skip_qc;
    if (qc_checked) {
        qb_status s = qb_check_quasiconvex(f.e, o.a, o.b, o.q, 0, &qc);
        if (s != QB_OK) return reportError(s);
        if (!qc.is_quasiconvex) {
            std::cerr << "error: |f'|^q fails the quasi-convexity check (max violation "
                      << record::formatDouble(qc.max_violation)
                      << "); the bounds are not certificates for this input. Pass "
                         "--skip-qc-check to evaluate them anyway.\n";
            return 3;
        }
    }

    qb_bound_report rep{};
    qb_status s = qb_bound_report_run(f.e, o.a, o.b, theta, lambda, o.q, 1e-13, &rep);
    if (s != QB_OK) return reportError(s);

    if (o.format == "csv") {
        emit(record::csvRow({"command", "fn", "a", "b", "theta", "lambda", "q", "qc_checked",
                             "quasiconvex", "qc_max_violation", "rule_value", "reference_mean",
                             "actual_error", "bound_pm", "bound_holder", "pm_valid",
                             "holder_valid"}));
        emit(record::csvRow(
            {"bound", o.fn, record::formatDouble(o.a), record::formatDouble(o.b),
             record::formatDouble(theta), record::formatDouble(lambda),
             record::formatDouble(o.q), record::boolText(qc_checked),
             qc_checked ? record::boolText(qc.is_quasiconvex != 0) : "",
             qc_checked ? record::formatDouble(qc.max_violation) : "",
             record::formatDouble(rep.rule_value), record::formatDouble(rep.reference_mean),
             record::formatDouble(rep.actual_error), record::formatDouble(rep.bound_power_mean),
             rep.has_holder ? record::formatDouble(rep.bound_holder) : "",
             record::boolText(rep.pm_valid != 0),
             rep.has_holder ? record::boolText(rep.holder_valid != 0) : ""}));
        return 0;
    }

    record::JsonObjectWriter w;
    w.textField("command", "bound")
        .textField("fn", o.fn)
        .numberField("a", o.a)
        .numberField("b", o.b)
        .numberField("theta", theta)
        .numberField("lambda", lambda)
        .numberField("q", o.q)
        .boolField("qc_checked", qc_checked);
    if (qc_checked) {
        w.boolField("quasiconvex", qc.is_quasiconvex != 0)
            .numberField("qc_max_violation", qc.max_violation);
    }
    w.numberField("rule_value", rep.rule_value)
        .numberField("reference_mean", rep.reference_mean)
        .numberField("actual_error", rep.actual_error)
        .numberField("bound_pm", rep.bound_power_mean);
    if (rep.has_holder)
        w.numberField("bound_holder", rep.bound_holder);
    else
        w.nullField("bound_holder");
    w.boolField("pm_valid", rep.pm_valid != 0);
    if (rep.has_holder)
        w.boolField("holder_valid", rep.holder_valid != 0);
    else
        w.nullField("holder_valid");
    emit(w.str());
    return 0;
}

// ------------------------------------------------------------ integrate

struct IntegrateOpts {
    std::string fn;
    double a = 0.0, b = 1.0;
    ParamSpec params;
    double q = 1.0;
    std::string format = "json";
    bool skip_qc = false;
    double tol = 0.0;
    bool tol_set = false;
    std::size_t max_depth = 40;
    std::size_t n = 0;
    bool dump = false;
};

int runIntegrate(const IntegrateOpts& o) {
    ExprHandle f;
    if (int c = parseExpr(o.fn, f)) return c;
    double theta = 0.0, lambda = 0.0;
    if (int c = resolveParams(o.params, theta, lambda)) return c;

    CertifiedHandle res;
    qb_status s;
    if (o.n > 0) {
        s = qb_composite_fixed(f.e, o.a, o.b, theta, lambda, o.q, o.n, &res.r);
    } else {
        if (!o.tol_set) {
            std::cerr << "error: --tol is required unless --n selects a fixed partition\n";
            return 2;
        }
        s = qb_certified_integrate(f.e, o.a, o.b, theta, lambda, o.q, o.tol, o.max_depth,
                                   o.skip_qc ? 1 : 0, &res.r);
    }
    if (s != QB_OK) return reportError(s);

    bool converged = qb_certified_converged(res.r) != 0;
    size_t count = qb_certified_count(res.r);

    if (o.dump) {
        emit(record::csvRow({"a", "b", "local_bound"}));
        for (size_t i = 0; i < count; ++i) {
            double pa = 0, pb = 0, lb = 0;
            qb_certified_piece(res.r, i, &pa, &pb, &lb);
            emit(record::csvRow({record::formatDouble(pa), record::formatDouble(pb),
                                 record::formatDouble(lb)}));
        }
    } else if (o.format == "csv") {
        emit(record::csvRow({"command", "fn", "a", "b", "theta", "lambda", "q", "tol", "n",
                             "max_depth", "converged", "integral_estimate", "certified_bound",
                             "subinterval_count"}));
        emit(record::csvRow(
            {"integrate", o.fn, record::formatDouble(o.a), record::formatDouble(o.b),
             record::formatDouble(theta), record::formatDouble(lambda),
             record::formatDouble(o.q), o.n > 0 ? "" : record::formatDouble(o.tol),
             o.n > 0 ? std::to_string(o.n) : "",
             o.n > 0 ? "" : std::to_string(o.max_depth), record::boolText(converged),
             record::formatDouble(qb_certified_estimate(res.r)),
             record::formatDouble(qb_certified_bound(res.r)), std::to_string(count)}));
    } else {
        record::JsonObjectWriter w;
        w.textField("command", "integrate")
            .textField("fn", o.fn)
            .numberField("a", o.a)
            .numberField("b", o.b)
            .numberField("theta", theta)
            .numberField("lambda", lambda)
            .numberField("q", o.q);
        if (o.n > 0)
            w.intField("n", static_cast<std::int64_t>(o.n));
        else
            w.numberField("tol", o.tol).intField("max_depth",
                                                 static_cast<std::int64_t>(o.max_depth));
        w.boolField("converged", converged)
            .numberField("integral_estimate", qb_certified_estimate(res.r))
            .numberField("certified_bound", qb_certified_bound(res.r))
            .intField("subinterval_count", static_cast<std::int64_t>(count));
        emit(w.str());
    }
    return converged ? 0 : 4;
}

// --------------------------------------------------------------- verify

struct VerifyOpts {
    std::string what;
    std::string fn;
    double a = 0.0, b = 1.0;
    double theta = 0.0, lambda = 0.0;
    bool theta_set = false, lambda_set = false;
    double tol = 1e-12;
    std::string format = "json";
};

constexpr double kVerifyPassTol = 1e-9;

int runVerify(const VerifyOpts& o) {
    ExprHandle f;
    if (int c = parseExpr(o.fn, f)) return c;

    if (o.what == "identity") {
        if (!o.theta_set || !o.lambda_set) {
            std::cerr << "error: verify --what identity needs --theta and --lambda\n";
            return 2;
        }
        double residual = 0.0;
        qb_status s =
            qb_verify_identity(f.e, o.a, o.b, o.theta, o.lambda, o.tol, &residual);
        if (s != QB_OK) return reportError(s);
        bool pass = residual < kVerifyPassTol;
        if (o.format == "csv") {
            emit(record::csvRow({"command", "what", "fn", "a", "b", "theta", "lambda", "tol",
                                 "residual", "pass"}));
            emit(record::csvRow({"verify", "identity", o.fn, record::formatDouble(o.a),
                                 record::formatDouble(o.b), record::formatDouble(o.theta),
                                 record::formatDouble(o.lambda), record::formatDouble(o.tol),
                                 record::formatDouble(residual), record::boolText(pass)}));
        } else {
            record::JsonObjectWriter w;
            w.textField("command", "verify")
                .textField("what", "identity")
                .textField("fn", o.fn)
                .numberField("a", o.a)
                .numberField("b", o.b)
                .numberField("theta", o.theta)
                .numberField("lambda", o.lambda)
                .numberField("tol", o.tol)
                .numberField("residual", residual)
                .boolField("pass", pass);
            emit(w.str());
        }
        return 0;
    }

    // hh: the two Hermite-Hadamard gaps, non-negative for convex f.
    double lower = 0.0, upper = 0.0;
    qb_status s = qb_verify_hermite_hadamard(f.e, o.a, o.b, &lower, &upper);
    if (s != QB_OK) return reportError(s);
    bool pass = lower >= -kVerifyPassTol && upper >= -kVerifyPassTol;
    if (o.format == "csv") {
        emit(record::csvRow({"command", "what", "fn", "a", "b", "lower_gap", "upper_gap",
                             "pass"}));
        emit(record::csvRow({"verify", "hh", o.fn, record::formatDouble(o.a),
                             record::formatDouble(o.b), record::formatDouble(lower),
                             record::formatDouble(upper), record::boolText(pass)}));
    } else {
        record::JsonObjectWriter w;
        w.textField("command", "verify")
            .textField("what", "hh")
            .textField("fn", o.fn)
            .numberField("a", o.a)
            .numberField("b", o.b)
            .numberField("lower_gap", lower)
            .numberField("upper_gap", upper)
            .boolField("pass", pass);
        emit(w.str());
    }
    return 0;
}

// ---------------------------------------------------------------- sweep

struct SweepOpts {
    std::string fn;
    double a = 0.0, b = 1.0;
    int theta_steps = 0;
    int lambda_steps = 0;
    std::vector<double> qs;
};

int runSweep(const SweepOpts& o) {
    ExprHandle f;
    if (int c = parseExpr(o.fn, f)) return c;
    if (o.theta_steps < 2 || o.lambda_steps < 2) {
        std::cerr << "error: --theta-steps and --lambda-steps must be at least 2\n";
        return 2;
    }

    auto grid = [](int steps) {
        std::vector<double> g(static_cast<size_t>(steps));
        for (int i = 0; i < steps; ++i) g[static_cast<size_t>(i)] = i / (steps - 1.0);
        return g;
    };
    std::vector<double> thetas = grid(o.theta_steps);
    std::vector<double> lambdas = grid(o.lambda_steps);

    SweepHandle sweep;
    qb_status s = qb_sweep_run(f.e, o.a, o.b, thetas.data(), thetas.size(), lambdas.data(),
                               lambdas.size(), o.qs.data(), o.qs.size(), envThreadCap(),
                               &sweep.s);
    if (s != QB_OK) return reportError(s);

    emit(record::csvRow({"theta", "lambda", "q", "rule_value", "reference_mean", "actual_error",
                         "bound_pm", "bound_holder", "sharpness_pm", "sharpness_holder"}));
    size_t count = qb_sweep_count(sweep.s);
    for (size_t i = 0; i < count; ++i) {
        qb_sweep_row row{};
        qb_sweep_row_get(sweep.s, i, &row);
        emit(record::csvRow(
            {record::formatDouble(row.theta), record::formatDouble(row.lambda),
             record::formatDouble(row.q), record::formatDouble(row.rule_value),
             record::formatDouble(row.reference_mean), record::formatDouble(row.actual_error),
             record::formatDouble(row.bound_pm),
             row.has_holder ? record::formatDouble(row.bound_holder) : "",
             record::formatDouble(row.sharpness_pm),
             row.has_holder ? record::formatDouble(row.sharpness_holder) : ""}));
    }
    return 0;
}

// ---------------------------------------------------------------- means

struct MeansOpts {
    double a = 0.0, b = 1.0;
    double alpha = 0.5;
    bool alpha_set = false;
    int n = 0;
    bool n_set = false;
    int prop = 0;
    bool prop_set = false;
    double theta = 0.0, lambda = 0.0, q = 1.0;
    bool theta_set = false, lambda_set = false, q_set = false;
    std::string format = "json";
};

int runProposition(const MeansOpts& o) {
    if (!o.theta_set || !o.lambda_set || !o.q_set) {
        std::cerr << "error: --prop needs --theta, --lambda, and --q\n";
        return 2;
    }
    bool needs_n = o.prop == 1 || o.prop == 2;
    if (needs_n && !o.n_set) {
        std::cerr << "error: --prop " << o.prop << " needs --n\n";
        return 2;
    }
    qb_prop_result pr{};
    qb_status s = qb_proposition_run(o.prop, o.n, o.theta, o.lambda, o.q, o.a, o.b, &pr);
    if (s != QB_OK) return reportError(s);

    if (o.format == "csv") {
        emit(record::csvRow({"command", "prop", "n", "theta", "lambda", "q", "a", "b", "lhs",
                             "rhs", "slack", "holds"}));
        emit(record::csvRow({"means", std::to_string(o.prop),
                             needs_n ? std::to_string(o.n) : "",
                             record::formatDouble(o.theta), record::formatDouble(o.lambda),
                             record::formatDouble(o.q), record::formatDouble(o.a),
                             record::formatDouble(o.b), record::formatDouble(pr.lhs),
                             record::formatDouble(pr.rhs), record::formatDouble(pr.slack),
                             record::boolText(pr.holds != 0)}));
    } else {
        record::JsonObjectWriter w;
        w.textField("command", "means").intField("prop", o.prop);
        if (needs_n) w.intField("n", o.n);
        w.numberField("theta", o.theta)
            .numberField("lambda", o.lambda)
            .numberField("q", o.q)
            .numberField("a", o.a)
            .numberField("b", o.b)
            .numberField("lhs", pr.lhs)
            .numberField("rhs", pr.rhs)
            .numberField("slack", pr.slack)
            .boolField("holds", pr.holds != 0);
        emit(w.str());
    }
    return 0;
}

int runMeans(const MeansOpts& o) {
    if (o.prop_set) return runProposition(o);

    // Defined means are included; undefined default means are skipped.
    // Explicitly requested ones (--alpha weights, --n) fail hard.
    std::vector<std::pair<std::string, double>> values;
    double v = 0.0;
    if (qb_mean_arithmetic(o.a, o.b, &v) == QB_OK) values.emplace_back("arithmetic", v);
    if (qb_mean_harmonic(o.a, o.b, &v) == QB_OK) values.emplace_back("harmonic", v);
    if (qb_mean_logarithmic(o.a, o.b, &v) == QB_OK) values.emplace_back("logarithmic", v);
    if (o.alpha_set) {
        qb_status s = qb_mean_weighted_arithmetic(o.alpha, o.a, o.b, &v);
        if (s != QB_OK) return reportError(s);
        values.emplace_back("weighted_arithmetic", v);
        if (qb_mean_weighted_harmonic(o.alpha, o.a, o.b, &v) == QB_OK)
            values.emplace_back("weighted_harmonic", v);
    }
    if (o.n_set) {
        qb_status s = qb_mean_n_logarithmic(o.n, o.a, o.b, &v);
        if (s != QB_OK) return reportError(s);
        values.emplace_back("n_logarithmic", v);
    }

    if (o.format == "csv") {
        std::vector<std::string> header{"command", "a", "b"};
        std::vector<std::string> row{"means", record::formatDouble(o.a),
                                     record::formatDouble(o.b)};
        if (o.alpha_set) {
            header.push_back("alpha");
            row.push_back(record::formatDouble(o.alpha));
        }
        if (o.n_set) {
            header.push_back("n");
            row.push_back(std::to_string(o.n));
        }
        for (const auto& [name, value] : values) {
            header.push_back(name);
            row.push_back(record::formatDouble(value));
        }
        emit(record::csvRow(header));
        emit(record::csvRow(row));
    } else {
        record::JsonObjectWriter w;
        w.textField("command", "means").numberField("a", o.a).numberField("b", o.b);
        if (o.alpha_set) w.numberField("alpha", o.alpha);
        if (o.n_set) w.intField("n", o.n);
        for (const auto& [name, value] : values) w.numberField(name, value);
        emit(w.str());
    }
    return 0;
}

void addFormatOption(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadrature rules R(f) = (1-theta)(lambda f(a) + (1-lambda) f(b)) + theta f(C) "
                 "for the mean of f over [a,b], with certified error bounds for functions "
                 "whose |f'|^q is quasi-convex"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qb_version());

    BoundOpts bound_opts;
    CLI::App* bound = app.add_subcommand("bound", "Rule value and certified error bounds");
    bound->add_option("--fn", bound_opts.fn, "expression in x")->required();
    bound->add_option("--a", bound_opts.a, "left endpoint")->required();
    bound->add_option("--b", bound_opts.b, "right endpoint")->required();
    CLI::Option* bt = bound->add_option("--theta", bound_opts.params.theta, "interior weight");
    CLI::Option* bl = bound->add_option("--lambda", bound_opts.params.lambda, "node placement");
    bound->add_option("--rule", bound_opts.params.rule, "preset: simpson|midpoint|trapezoid")
        ->excludes(bt)
        ->excludes(bl);
    bound->add_option("--q", bound_opts.q, "exponent, >= 1")->required();
    bound->add_flag("--skip-qc-check", bound_opts.skip_qc,
                    "evaluate bounds without the quasi-convexity precondition");
    addFormatOption(bound, bound_opts.format);

    IntegrateOpts int_opts;
    CLI::App* integrate =
        app.add_subcommand("integrate", "Composite integration with a certified error bound");
    integrate->add_option("--fn", int_opts.fn, "expression in x")->required();
    integrate->add_option("--a", int_opts.a, "left endpoint")->required();
    integrate->add_option("--b", int_opts.b, "right endpoint")->required();
    CLI::Option* it = integrate->add_option("--theta", int_opts.params.theta, "interior weight");
    CLI::Option* il = integrate->add_option("--lambda", int_opts.params.lambda, "node placement");
    integrate->add_option("--rule", int_opts.params.rule, "preset: simpson|midpoint|trapezoid")
        ->excludes(it)
        ->excludes(il);
    integrate->add_option("--q", int_opts.q, "exponent, >= 1")->required();
    CLI::Option* tol_opt =
        integrate->add_option("--tol", int_opts.tol, "certified bound target, integral scale");
    integrate->add_option("--max-depth", int_opts.max_depth, "bisection depth limit")
        ->capture_default_str();
    integrate->add_option("--n", int_opts.n, "fixed uniform partition instead of adaptive");
    integrate->add_flag("--dump-subintervals", int_opts.dump,
                        "print the partition as CSV instead of a summary");
    integrate->add_flag("--skip-qc-check", int_opts.skip_qc,
                        "skip the quasi-convexity precondition");
    addFormatOption(integrate, int_opts.format);

    VerifyOpts verify_opts;
    CLI::App* verify =
        app.add_subcommand("verify", "Check the rule-vs-mean identity or the classical "
                                     "midpoint/trapezoid mean inequalities");
    verify->add_option("--what", verify_opts.what, "identity|hh")
        ->required()
        ->check(CLI::IsMember({"identity", "hh"}));
    verify->add_option("--fn", verify_opts.fn, "expression in x")->required();
    verify->add_option("--a", verify_opts.a, "left endpoint")->required();
    verify->add_option("--b", verify_opts.b, "right endpoint")->required();
    CLI::Option* vt = verify->add_option("--theta", verify_opts.theta, "interior weight");
    CLI::Option* vl = verify->add_option("--lambda", verify_opts.lambda, "node placement");
    verify->add_option("--tol", verify_opts.tol, "oracle tolerance")->capture_default_str();
    addFormatOption(verify, verify_opts.format);

    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "CSV stream of rule error, bounds, and sharpness over a parameter grid");
    sweep->add_option("--fn", sweep_opts.fn, "expression in x")->required();
    sweep->add_option("--a", sweep_opts.a, "left endpoint")->required();
    sweep->add_option("--b", sweep_opts.b, "right endpoint")->required();
    sweep->add_option("--theta-steps", sweep_opts.theta_steps, "grid size over theta, >= 2")
        ->required();
    sweep->add_option("--lambda-steps", sweep_opts.lambda_steps, "grid size over lambda, >= 2")
        ->required();
    sweep->add_option("--q", sweep_opts.qs, "exponent list, each >= 1")
        ->required()
        ->delimiter(',');

    MeansOpts means_opts;
    CLI::App* means =
        app.add_subcommand("means", "Special means and the rule-family inequality instances");
    means->add_option("--a", means_opts.a, "first argument")->required();
    means->add_option("--b", means_opts.b, "second argument")->required();
    CLI::Option* ma = means->add_option("--alpha", means_opts.alpha, "weight in [0,1]");
    CLI::Option* mn = means->add_option("--n", means_opts.n, "order of the n-logarithmic mean");
    CLI::Option* mp = means->add_option("--prop", means_opts.prop,
                                        "inequality instance 1|2|3|4 (power/reciprocal x "
                                        "power-mean/conjugate bound)")
                          ->check(CLI::Range(1, 4));
    CLI::Option* mt = means->add_option("--theta", means_opts.theta, "interior weight");
    CLI::Option* ml = means->add_option("--lambda", means_opts.lambda, "node placement");
    CLI::Option* mq = means->add_option("--q", means_opts.q, "exponent");
    addFormatOption(means, means_opts.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (bound->parsed()) {
        bound_opts.params.theta_set = bt->count() > 0;
        bound_opts.params.lambda_set = bl->count() > 0;
        return runBound(bound_opts);
    }
    if (integrate->parsed()) {
        int_opts.params.theta_set = it->count() > 0;
        int_opts.params.lambda_set = il->count() > 0;
        int_opts.tol_set = tol_opt->count() > 0;
        return runIntegrate(int_opts);
    }
    if (verify->parsed()) {
        verify_opts.theta_set = vt->count() > 0;
        verify_opts.lambda_set = vl->count() > 0;
        return runVerify(verify_opts);
    }
    if (sweep->parsed()) return runSweep(sweep_opts);
    if (means->parsed()) {
        means_opts.alpha_set = ma->count() > 0;
        means_opts.n_set = mn->count() > 0;
        means_opts.prop_set = mp->count() > 0;
        means_opts.theta_set = mt->count() > 0;
        means_opts.lambda_set = ml->count() > 0;
        means_opts.q_set = mq->count() > 0;
        return runMeans(means_opts);
    }
    return 2;
}
