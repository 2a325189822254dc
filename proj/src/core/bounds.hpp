#ifndef QBOUND_CORE_BOUNDS_HPP
#define QBOUND_CORE_BOUNDS_HPP

#include <optional>

#include "rules.hpp"

namespace qbound {

/// Conjugate exponent pair: p = q/(q-1), defined for q > 1.
struct ExponentPair {
    double q;
    double p;
};

/// Throws UnsupportedExponent unless q > 1 strictly.
ExponentPair conjugate(double q);

/// First absolute kernel moment: integral over [0,1] of |t - theta| dt,
/// equal to theta^2 - theta + 1/2. Symmetric under theta -> 1 - theta.
double kernelMomentPm(double theta);

/// p-th absolute kernel moment: integral over [0,1] of |t - theta|^p dt,
/// equal to (theta^{p+1} + (1-theta)^{p+1}) / (p+1). At p == 1 it takes the
/// kernelMomentPm path so the two moments agree bit-for-bit.
double kernelMomentHolder(double theta, double p);

/// (max(|df(x)|^q, |df(c)|^q))^{1/q} computed as max(|df(x)|, |df(c)|);
/// the composite is independent of q >= 1.
double supDerivativeTerm(const RealFn& df, double x, double c, double q);

/// Certified bound on |rule - mean| when |f'|^q is quasi-convex on the
/// interval, q >= 1:
///   (b-a)(theta^2 - theta + 1/2)[lambda^2 S_a + (1-lambda)^2 S_b],
/// S_a = max(|f'(a)|, |f'(C)|), S_b = max(|f'(b)|, |f'(C)|).
double boundPowerMean(RuleParams p, Interval iv, const RealFn& df, double q);

/// Certified bound via the conjugate-exponent route, q > 1:
///   (b-a) kernelMomentHolder(theta, p)^{1/p} [lambda^2 S_a + (1-lambda)^2 S_b].
/// Throws UnsupportedExponent at q <= 1.
double boundHolder(RuleParams p, Interval iv, const RealFn& df, double q);

/// min of the two applicable bounds; the power-mean bound alone at q == 1.
double bestBound(RuleParams p, Interval iv, const RealFn& df, double q);

/// Classical Simpson remainder on the mean error:
///   sup|f''''| (b-a)^4 / 2880.
/// Attained by f = x^4 (see docs for the exponent discussion).
double classicalSimpsonBound(Interval iv, double sup_f4);

/// Side-by-side record of the rule value, the reference mean, and both bounds.
struct BoundReport {
    double rule_value = 0.0;
    double reference_mean = 0.0;
    double actual_error = 0.0;
    double bound_power_mean = 0.0;
    std::optional<double> bound_holder;
    bool pm_valid = false;
    bool holder_valid = false;
};

/// Rounding headroom used by the validity flags:
/// actual <= bound + 1e-14 + 1e-12 * bound.
double validitySlack(double bound);

/// Assembles a BoundReport; `reference_mean` comes from the caller's oracle.
BoundReport boundReport(RuleParams p, Interval iv, const RealFn& f, const RealFn& df, double q,
                        double reference_mean);

} // namespace qbound

#endif
