#ifndef QBOUND_CORE_ANALYSIS_HPP
#define QBOUND_CORE_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bounds.hpp"

namespace qbound {

/// Outcome of the sampled valley test. Sampling can refute quasi-convexity
/// at resolution `samples`, never prove it; consumers should judge by the
/// sample count.
struct QuasiConvexityReport {
    bool is_quasiconvex = false;
    std::optional<std::size_t> valley_index; // present iff is_quasiconvex
    double max_violation = 0.0;
    std::size_t samples = 0;
};

/// Reference mean (1/(b-a)) * integral of f over [a,b], by adaptive
/// midpoint-subdivision Simpson steps accepted through their fifth-order
/// correction. Absolute tolerance `tol` applies to the mean; tol >= 1e-14.
/// Deterministic. Throws NoConvergence past depth 50.
double referenceMeanIntegral(const RealFn& f, Interval iv, double tol);

inline constexpr std::size_t kDefaultQcSamples = 1025;

/// Samples g on a uniform grid of n_samples points and accepts iff some
/// split index leaves the prefix non-increasing and the suffix
/// non-decreasing, each up to tol. tol < 0 selects the default
/// 1e-10 * max(1, max|g|).
QuasiConvexityReport checkQuasiconvex(const RealFn& g, Interval iv,
                                      std::size_t n_samples = kDefaultQcSamples,
                                      double tol = -1.0);

/// Residual |LHS - RHS| of the rule-vs-mean identity
///   rule - mean = (b-a)[ -lambda^2 I_a + (1-lambda)^2 I_b ],
///   I_x = integral over [0,1] of (t - theta) f'(t x + (1-t) C) dt,
/// with every integral taken by the reference oracle at `tol`.
double verifyIdentity(RuleParams p, Interval iv, const RealFn& f, const RealFn& df, double tol);

/// Gaps (mean - f(midpoint), endpoint average - mean); both non-negative
/// when f is convex on the interval.
std::pair<double, double> verifyHermiteHadamard(const RealFn& f, Interval iv);

/// One sweep sample: the rule, its error, and both bounds at (theta, lambda, q).
struct SweepRow {
    double theta = 0.0;
    double lambda = 0.0;
    double q = 1.0;
    double rule_value = 0.0;
    double reference_mean = 0.0;
    double actual_error = 0.0;
    double bound_pm = 0.0;
    std::optional<double> bound_holder;
    double sharpness_pm = 0.0;
    std::optional<double> sharpness_holder;
};

/// One row per (theta, lambda, q), ordered with theta outermost and q
/// innermost. `max_threads` caps worker threads (0 = hardware concurrency);
/// output is identical regardless of the thread count.
std::vector<SweepRow> sweep(const RealFn& f, const RealFn& df, Interval iv,
                            const std::vector<double>& theta_grid,
                            const std::vector<double>& lambda_grid,
                            const std::vector<double>& q_list, unsigned max_threads = 1);

} // namespace qbound

#endif
