#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "errors.hpp"

namespace qbound {

namespace {

constexpr int kMaxDepth = 50;

double simpsonStep(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// One bisection of [a,b]; accepts through the fifth-order correction so the
// returned value is the Richardson extrapolant, not the raw composite.
double adaptiveSimpson(const RealFn& f, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = simpsonStep(a, m, fa, flm, fm);
    double right = simpsonStep(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0)
        throw NoConvergence("adaptive integration did not converge on [" + std::to_string(a) +
                            ", " + std::to_string(b) + "]");
    double half_tol = 0.5 * tol;
    return adaptiveSimpson(f, a, m, fa, flm, fm, left, half_tol, depth - 1) +
           adaptiveSimpson(f, m, b, fm, frm, fb, right, half_tol, depth - 1);
}

double integrate(const RealFn& f, Interval iv, double tol_integral) {
    double m = iv.midpoint();
    double fa = f(iv.a);
    double fm = f(m);
    double fb = f(iv.b);
    double whole = simpsonStep(iv.a, iv.b, fa, fm, fb);
    return adaptiveSimpson(f, iv.a, iv.b, fa, fm, fb, whole, tol_integral, kMaxDepth);
}

void validateOracleTol(double tol) {
    if (!(tol >= 1e-14))
        throw InvalidArgument("tolerance must be >= 1e-14, got " + std::to_string(tol));
}

// Internal tolerance for means that only feed comparisons, not user-facing
// certified output.
constexpr double kProbeTol = 1e-13;

} // namespace

double referenceMeanIntegral(const RealFn& f, Interval iv, double tol) {
    validate(iv);
    validateOracleTol(tol);
    return integrate(f, iv, tol * iv.width()) / iv.width();
}

QuasiConvexityReport checkQuasiconvex(const RealFn& g, Interval iv, std::size_t n_samples,
                                      double tol) {
    validate(iv);
    if (n_samples < 3) throw InvalidArgument("quasi-convexity scan needs at least 3 samples");

    std::vector<double> y(n_samples);
    double max_abs = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(n_samples - 1);
        double x = std::lerp(iv.a, iv.b, t);
        y[i] = g(x);
        if (!std::isfinite(y[i]))
            throw DomainError("function is not finite at x = " + std::to_string(x));
        max_abs = std::max(max_abs, std::abs(y[i]));
    }
    if (tol < 0.0) tol = 1e-10 * std::max(1.0, max_abs);

    // up[i]: largest fall remaining in y[i..n-1]; the running `down` below is
    // the largest rise seen in y[0..k]. A split k is a valid valley when both
    // sides stay within tol.
    std::vector<double> up(n_samples, 0.0);
    for (std::size_t i = n_samples - 1; i-- > 0;)
        up[i] = std::max(up[i + 1], y[i] - y[i + 1]);

    double best = std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    double down = 0.0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        if (k > 0) down = std::max(down, y[k] - y[k - 1]);
        double viol = std::max(down, up[k]);
        if (viol < best) {
            best = viol;
            best_k = k;
        }
    }
    best = std::max(best, 0.0);

    QuasiConvexityReport report;
    report.samples = n_samples;
    report.max_violation = best;
    report.is_quasiconvex = best <= tol;
    if (report.is_quasiconvex) report.valley_index = best_k;
    return report;
}

double verifyIdentity(RuleParams p, Interval iv, const RealFn& f, const RealFn& df, double tol) {
    validate(p);
    validate(iv);
    double c = innerNode(p, iv);
    double lhs = evaluateRule(p, iv, f) - referenceMeanIntegral(f, iv, tol);

    Interval unit{0.0, 1.0};
    auto segment = [&](double endpoint) {
        RealFn integrand = [&, endpoint](double t) {
            return (t - p.theta) * df(t * endpoint + (1.0 - t) * c);
        };
        return referenceMeanIntegral(integrand, unit, tol);
    };
    double ia = segment(iv.a);
    double ib = segment(iv.b);
    double l2 = p.lambda * p.lambda;
    double m2 = (1.0 - p.lambda) * (1.0 - p.lambda);
    double rhs = iv.width() * (-l2 * ia + m2 * ib);
    return std::abs(lhs - rhs);
}

std::pair<double, double> verifyHermiteHadamard(const RealFn& f, Interval iv) {
    validate(iv);
    double mean = referenceMeanIntegral(f, iv, kProbeTol);
    double lower_gap = mean - f(iv.midpoint());
    double upper_gap = 0.5 * (f(iv.a) + f(iv.b)) - mean;
    return {lower_gap, upper_gap};
}

namespace {

void fillRow(SweepRow& row, Interval iv, const RealFn& f, const RealFn& df,
             double reference_mean) {
    RuleParams p{row.theta, row.lambda};
    row.reference_mean = reference_mean;
    row.rule_value = evaluateRule(p, iv, f);
    row.actual_error = std::abs(row.rule_value - reference_mean);
    row.bound_pm = boundPowerMean(p, iv, df, row.q);
    row.sharpness_pm = row.bound_pm > 0.0 ? row.actual_error / row.bound_pm : 0.0;
    if (row.q > 1.0) {
        double bh = boundHolder(p, iv, df, row.q);
        row.bound_holder = bh;
        row.sharpness_holder = bh > 0.0 ? row.actual_error / bh : 0.0;
    }
}

} // namespace

std::vector<SweepRow> sweep(const RealFn& f, const RealFn& df, Interval iv,
                            const std::vector<double>& theta_grid,
                            const std::vector<double>& lambda_grid,
                            const std::vector<double>& q_list, unsigned max_threads) {
    validate(iv);
    if (theta_grid.empty() || lambda_grid.empty() || q_list.empty())
        throw InvalidArgument("sweep grids must be nonempty");
    for (double t : theta_grid) validate(RuleParams{t, 0.0});
    for (double l : lambda_grid) validate(RuleParams{0.0, l});
    for (double q : q_list)
        if (!(q >= 1.0)) throw InvalidArgument("q must be >= 1, got " + std::to_string(q));

    std::size_t n = theta_grid.size() * lambda_grid.size() * q_list.size();
    std::vector<SweepRow> rows(n);

    double reference_mean = referenceMeanIntegral(f, iv, kProbeTol);
    std::size_t nl = lambda_grid.size();
    std::size_t nq = q_list.size();
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].theta = theta_grid[i / (nl * nq)];
        rows[i].lambda = lambda_grid[(i / nq) % nl];
        rows[i].q = q_list[i % nq];
    }

    unsigned workers = max_threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                        : max_threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    if (workers <= 1) {
        for (auto& row : rows) fillRow(row, iv, f, df, reference_mean);
        return rows;
    }

    // Contiguous chunks over a preallocated vector: output is independent of
    // the worker count. First exception (if any) is rethrown after join.
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fillRow(rows[i], iv, f, df, reference_mean);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

} // namespace qbound
