#ifndef QBOUND_CORE_INTEGRATE_HPP
#define QBOUND_CORE_INTEGRATE_HPP

#include <cstddef>
#include <vector>

#include "bounds.hpp"

namespace qbound {

/// One piece of the partition with its certified integral-scale error bound.
struct SubintervalBound {
    Interval piece;
    double local_bound = 0.0;
};

/// Composite rule value with a certified error bound, both on the integral
/// scale. When `converged` is set, |integral_estimate - true integral| <=
/// certified_bound <= the requested tolerance, provided |f'| is quasi-convex
/// on the interval. Subintervals partition the interval exactly (adjacent
/// endpoints bit-identical) and are sorted by left endpoint.
struct CertifiedResult {
    double integral_estimate = 0.0;
    double certified_bound = 0.0;
    bool converged = false;
    std::vector<SubintervalBound> subintervals;
};

inline constexpr std::size_t kDefaultMaxDepth = 40;

/// Greedy worst-first bisection: repeatedly split the subinterval with the
/// largest local bound (ties to the leftmost) until the total certified
/// bound is <= tol or every piece has been split max_depth times. tol is on
/// the integral scale. Quasi-convexity of |f'| is checked once up front
/// (restriction to subintervals preserves it); NotQuasiConvex on failure
/// unless skip_qc_check is set. A partial result with converged == false is
/// returned when the tolerance is unreachable within max_depth.
CertifiedResult certifiedIntegrate(const RealFn& f, const RealFn& df, Interval iv, RuleParams p,
                                   double q, double tol,
                                   std::size_t max_depth = kDefaultMaxDepth,
                                   bool skip_qc_check = false);

/// Uniform partition into n_subintervals pieces, same per-piece bound and
/// summation as certifiedIntegrate. No tolerance target, so converged is
/// always set.
CertifiedResult compositeFixed(const RealFn& f, const RealFn& df, Interval iv, RuleParams p,
                               double q, std::size_t n_subintervals);

} // namespace qbound

#endif
