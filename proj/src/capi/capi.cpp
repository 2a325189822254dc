#include "qbound/qbound.h"

#include <cmath>
#include <cstdint>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "../core/analysis.hpp"
#include "../core/bounds.hpp"
#include "../core/errors.hpp"
#include "../core/expr.hpp"
#include "../core/integrate.hpp"
#include "../core/means.hpp"
#include "../core/rules.hpp"

struct qb_expr {
    qbound::Expr expr;
    std::string canonical;
};

struct qb_certified {
    qbound::CertifiedResult result;
};

struct qb_sweep {
    std::vector<qbound::SweepRow> rows;
};

namespace {

constexpr size_t kNoPosition = static_cast<size_t>(-1);

thread_local std::string g_error_message;
thread_local size_t g_error_position = kNoPosition;

qb_status fail(qb_status code, const std::string& message, size_t position = kNoPosition) {
    g_error_message = message;
    g_error_position = position;
    return code;
}

qb_status nullArgument() { return fail(QB_ERR_NULL_ARGUMENT, "null argument"); }

// Runs `body` and maps the library's exception taxonomy onto status codes.
template <typename Body>
qb_status guarded(Body&& body) {
    try {
        body();
        return QB_OK;
    } catch (const qbound::SyntaxError& e) {
        return fail(QB_ERR_SYNTAX, e.what(), e.position());
    } catch (const qbound::UnsupportedExponent& e) {
        return fail(QB_ERR_UNSUPPORTED_EXPONENT, e.what());
    } catch (const qbound::InvalidArgument& e) {
        return fail(QB_ERR_INVALID_ARGUMENT, e.what());
    } catch (const qbound::NotQuasiConvex& e) {
        return fail(QB_ERR_NOT_QUASICONVEX, e.what());
    } catch (const qbound::NoConvergence& e) {
        return fail(QB_ERR_NO_CONVERGENCE, e.what());
    } catch (const qbound::DomainError& e) {
        return fail(QB_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(QB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QB_ERR_INTERNAL, "unknown error");
    }
}

qbound::RealFn valueFn(const qb_expr* e) { return qbound::exprValueFn(e->expr); }
qbound::RealFn derivativeFn(const qb_expr* e) { return qbound::exprDerivativeFn(e->expr); }

} // namespace

extern "C" {

const char* qb_version(void) { return "1.0.0"; }

const char* qb_last_error_message(void) { return g_error_message.c_str(); }

size_t qb_last_error_position(void) { return g_error_position; }

qb_status qb_expr_parse(const char* text, qb_expr** out) {
    if (!text || !out) return nullArgument();
    return guarded([&] {
        qbound::Expr parsed = qbound::Expr::parse(text);
        std::string canonical = parsed.text();
        *out = new qb_expr{std::move(parsed), std::move(canonical)};
    });
}

void qb_expr_free(qb_expr* e) { delete e; }

const char* qb_expr_text(const qb_expr* e) { return e ? e->canonical.c_str() : ""; }

qb_status qb_expr_eval(const qb_expr* e, double x, double* out) {
    if (!e || !out) return nullArgument();
    return guarded([&] { *out = e->expr.value(x); });
}

qb_status qb_expr_derivative(const qb_expr* e, double x, double* out) {
    if (!e || !out) return nullArgument();
    return guarded([&] { *out = e->expr.dual(x).derivative; });
}

qb_status qb_preset(const char* name, double* theta, double* lambda) {
    if (!name || !theta || !lambda) return nullArgument();
    auto which = qbound::presetFromName(name);
    if (!which)
        return fail(QB_ERR_INVALID_ARGUMENT,
                    "unknown rule preset '" + std::string(name) +
                        "' (expected simpson, midpoint, or trapezoid)");
    qbound::RuleParams p = qbound::preset(*which);
    *theta = p.theta;
    *lambda = p.lambda;
    return QB_OK;
}

qb_status qb_inner_node(double theta, double lambda, double a, double b, double* out) {
    if (!out) return nullArgument();
    return guarded([&] {
        qbound::RuleParams p{theta, lambda};
        qbound::Interval iv{a, b};
        qbound::validate(p);
        qbound::validate(iv);
        *out = qbound::innerNode(p, iv);
    });
}

qb_status qb_rule_value(const qb_expr* f, double a, double b, double theta, double lambda,
                        double* out) {
    if (!f || !out) return nullArgument();
    return guarded([&] {
        *out = qbound::evaluateRule(qbound::RuleParams{theta, lambda}, qbound::Interval{a, b},
                                    valueFn(f));
    });
}

qb_status qb_kernel_moment_pm(double theta, double* out) {
    if (!out) return nullArgument();
    return guarded([&] { *out = qbound::kernelMomentPm(theta); });
}

qb_status qb_kernel_moment_holder(double theta, double p, double* out) {
    if (!out) return nullArgument();
    return guarded([&] { *out = qbound::kernelMomentHolder(theta, p); });
}

qb_status qb_reference_mean(const qb_expr* f, double a, double b, double tol, double* out) {
    if (!f || !out) return nullArgument();
    return guarded(
        [&] { *out = qbound::referenceMeanIntegral(valueFn(f), qbound::Interval{a, b}, tol); });
}

qb_status qb_check_quasiconvex(const qb_expr* f, double a, double b, double q, size_t n_samples,
                               qb_qc_report* out) {
    if (!f || !out) return nullArgument();
    return guarded([&] {
        if (!(q >= 1.0)) throw qbound::InvalidArgument("q must satisfy q >= 1");
        qbound::RealFn df = derivativeFn(f);
        // |f'|^q; the q == 1 path skips pow so the plain |f'| check is exact.
        qbound::RealFn g = q == 1.0
                               ? qbound::RealFn([df](double x) { return std::abs(df(x)); })
                               : qbound::RealFn([df, q](double x) {
                                     return std::pow(std::abs(df(x)), q);
                                 });
        size_t n = n_samples == 0 ? qbound::kDefaultQcSamples : n_samples;
        qbound::QuasiConvexityReport report =
            qbound::checkQuasiconvex(g, qbound::Interval{a, b}, n);
        out->is_quasiconvex = report.is_quasiconvex ? 1 : 0;
        out->valley_index = report.valley_index.value_or(kNoPosition);
        out->max_violation = report.max_violation;
        out->samples = report.samples;
    });
}

qb_status qb_bound_report_run(const qb_expr* f, double a, double b, double theta, double lambda,
                              double q, double oracle_tol, qb_bound_report* out) {
    if (!f || !out) return nullArgument();
    return guarded([&] {
        qbound::RuleParams p{theta, lambda};
        qbound::Interval iv{a, b};
        double mean = qbound::referenceMeanIntegral(valueFn(f), iv, oracle_tol);
        qbound::BoundReport report =
            qbound::boundReport(p, iv, valueFn(f), derivativeFn(f), q, mean);
        out->rule_value = report.rule_value;
        out->reference_mean = report.reference_mean;
        out->actual_error = report.actual_error;
        out->bound_power_mean = report.bound_power_mean;
        out->has_holder = report.bound_holder.has_value() ? 1 : 0;
        out->bound_holder = report.bound_holder.value_or(0.0);
        out->pm_valid = report.pm_valid ? 1 : 0;
        out->holder_valid = report.holder_valid ? 1 : 0;
    });
}

qb_status qb_verify_identity(const qb_expr* f, double a, double b, double theta, double lambda,
                             double tol, double* residual) {
    if (!f || !residual) return nullArgument();
    return guarded([&] {
        *residual = qbound::verifyIdentity(qbound::RuleParams{theta, lambda},
                                           qbound::Interval{a, b}, valueFn(f), derivativeFn(f),
                                           tol);
    });
}

qb_status qb_verify_hermite_hadamard(const qb_expr* f, double a, double b, double* lower_gap,
                                     double* upper_gap) {
    if (!f || !lower_gap || !upper_gap) return nullArgument();
    return guarded([&] {
        auto gaps = qbound::verifyHermiteHadamard(valueFn(f), qbound::Interval{a, b});
        *lower_gap = gaps.first;
        *upper_gap = gaps.second;
    });
}

qb_status qb_certified_integrate(const qb_expr* f, double a, double b, double theta,
                                 double lambda, double q, double tol, size_t max_depth,
                                 int skip_qc_check, qb_certified** out) {
    if (!f || !out) return nullArgument();
    return guarded([&] {
        size_t depth = max_depth == 0 ? qbound::kDefaultMaxDepth : max_depth;
        qbound::CertifiedResult result = qbound::certifiedIntegrate(
            valueFn(f), derivativeFn(f), qbound::Interval{a, b}, qbound::RuleParams{theta, lambda},
            q, tol, depth, skip_qc_check != 0);
        *out = new qb_certified{std::move(result)};
    });
}

qb_status qb_composite_fixed(const qb_expr* f, double a, double b, double theta, double lambda,
                             double q, size_t n_subintervals, qb_certified** out) {
    if (!f || !out) return nullArgument();
    return guarded([&] {
        qbound::CertifiedResult result =
            qbound::compositeFixed(valueFn(f), derivativeFn(f), qbound::Interval{a, b},
                                   qbound::RuleParams{theta, lambda}, q, n_subintervals);
        *out = new qb_certified{std::move(result)};
    });
}

double qb_certified_estimate(const qb_certified* r) {
    return r ? r->result.integral_estimate : 0.0;
}

double qb_certified_bound(const qb_certified* r) { return r ? r->result.certified_bound : 0.0; }

int qb_certified_converged(const qb_certified* r) {
    return r && r->result.converged ? 1 : 0;
}

size_t qb_certified_count(const qb_certified* r) {
    return r ? r->result.subintervals.size() : 0;
}

qb_status qb_certified_piece(const qb_certified* r, size_t index, double* piece_a,
                             double* piece_b, double* local_bound) {
    if (!r || !piece_a || !piece_b || !local_bound) return nullArgument();
    if (index >= r->result.subintervals.size())
        return fail(QB_ERR_INVALID_ARGUMENT, "subinterval index out of range");
    const qbound::SubintervalBound& piece = r->result.subintervals[index];
    *piece_a = piece.piece.a;
    *piece_b = piece.piece.b;
    *local_bound = piece.local_bound;
    return QB_OK;
}

void qb_certified_free(qb_certified* r) { delete r; }

qb_status qb_sweep_run(const qb_expr* f, double a, double b, const double* thetas,
                       size_t n_thetas, const double* lambdas, size_t n_lambdas,
                       const double* qs, size_t n_qs, unsigned max_threads, qb_sweep** out) {
    if (!f || !out) return nullArgument();
    if ((n_thetas && !thetas) || (n_lambdas && !lambdas) || (n_qs && !qs)) return nullArgument();
    return guarded([&] {
        std::vector<double> theta_grid(thetas, thetas + n_thetas);
        std::vector<double> lambda_grid(lambdas, lambdas + n_lambdas);
        std::vector<double> q_list(qs, qs + n_qs);
        std::vector<qbound::SweepRow> rows =
            qbound::sweep(valueFn(f), derivativeFn(f), qbound::Interval{a, b}, theta_grid,
                          lambda_grid, q_list, max_threads);
        *out = new qb_sweep{std::move(rows)};
    });
}

size_t qb_sweep_count(const qb_sweep* s) { return s ? s->rows.size() : 0; }

qb_status qb_sweep_row_get(const qb_sweep* s, size_t index, qb_sweep_row* out) {
    if (!s || !out) return nullArgument();
    if (index >= s->rows.size()) return fail(QB_ERR_INVALID_ARGUMENT, "sweep index out of range");
    const qbound::SweepRow& row = s->rows[index];
    out->theta = row.theta;
    out->lambda = row.lambda;
    out->q = row.q;
    out->rule_value = row.rule_value;
    out->reference_mean = row.reference_mean;
    out->actual_error = row.actual_error;
    out->bound_pm = row.bound_pm;
    out->has_holder = row.bound_holder.has_value() ? 1 : 0;
    out->bound_holder = row.bound_holder.value_or(0.0);
    out->sharpness_pm = row.sharpness_pm;
    out->sharpness_holder = row.sharpness_holder.value_or(0.0);
    return QB_OK;
}

void qb_sweep_free(qb_sweep* s) { delete s; }

qb_status qb_mean_weighted_arithmetic(double alpha, double a, double b, double* out) {
    if (!out) return nullArgument();
    return guarded([&] { *out = qbound::weightedArithmetic(alpha, a, b); });
}

qb_status qb_mean_arithmetic(double a, double b, double* out) {
    if (!out) return nullArgument();
    return guarded([&] { *out = qbound::arithmeticMean(a, b); });
}

qb_status qb_mean_weighted_harmonic(double alpha, double a, double b, double* out) {
    if (!out) return nullArgument();
    return guarded([&] { *out = qbound::weightedHarmonic(alpha, a, b); });
}

qb_status qb_mean_harmonic(double a, double b, double* out) {
    if (!out) return nullArgument();
    return guarded([&] { *out = qbound::harmonicMean(a, b); });
}

qb_status qb_mean_logarithmic(double a, double b, double* out) {
    if (!out) return nullArgument();
    return guarded([&] { *out = qbound::logarithmicMean(a, b); });
}

qb_status qb_mean_n_logarithmic(int n, double a, double b, double* out) {
    if (!out) return nullArgument();
    return guarded([&] { *out = qbound::nLogarithmicMean(n, a, b); });
}

qb_status qb_mean_n_logarithmic_pow(int n, double a, double b, double* out) {
    if (!out) return nullArgument();
    return guarded([&] { *out = qbound::nLogarithmicMeanPow(n, a, b); });
}

qb_status qb_proposition_run(int which, int n, double theta, double lambda, double q, double a,
                             double b, qb_prop_result* out) {
    if (!out) return nullArgument();
    return guarded([&] {
        qbound::RuleParams p{theta, lambda};
        qbound::Interval iv{a, b};
        qbound::PropositionResult result;
        switch (which) {
        case 1: result = qbound::propositionPowerPm(n, p, q, iv); break;
        case 2: result = qbound::propositionPowerHolder(n, p, q, iv); break;
        case 3: result = qbound::propositionReciprocalPm(p, q, iv); break;
        case 4: result = qbound::propositionReciprocalHolder(p, q, iv); break;
        default:
            throw qbound::InvalidArgument("proposition selector must be 1, 2, 3, or 4");
        }
        out->lhs = result.lhs;
        out->rhs = result.rhs;
        out->slack = result.slack;
        out->holds = result.holds ? 1 : 0;
    });
}

} // extern "C"
