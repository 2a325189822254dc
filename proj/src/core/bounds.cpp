#include "bounds.hpp"

#include <algorithm>
#include <cmath>

namespace qbound {
namespace {

void validateTheta(double theta) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw InvalidArgument("theta must lie in [0,1]");
}

void validateQ(double q) {
    if (!(q >= 1.0))
        throw InvalidArgument("q must satisfy q >= 1");
}

// lambda^2 S_a + (1-lambda)^2 S_b with S_* the sup terms at the endpoints.
double weightedSupTerms(RuleParams p, Interval iv, const RealFn& df, double q) {
    double c = innerNode(p, iv);
    double sa = supDerivativeTerm(df, iv.a, c, q);
    double sb = supDerivativeTerm(df, iv.b, c, q);
    return p.lambda * p.lambda * sa + (1.0 - p.lambda) * (1.0 - p.lambda) * sb;
}

} // namespace

ExponentPair conjugate(double q) {
    if (!(q > 1.0))
        throw UnsupportedExponent("conjugate exponent requires q > 1");
    return ExponentPair{q, q / (q - 1.0)};
}

double kernelMomentPm(double theta) {
    validateTheta(theta);
    // (theta - 1/2)^2 + 1/4: same value as theta^2 - theta + 1/2 and exactly
    // symmetric under theta -> 1 - theta. Evaluated in extended precision so
    // the returned double is the correctly rounded moment; plain double
    // arithmetic is one ulp off near theta = 0.1 and 0.3.
    long double u = static_cast<long double>(theta) - 0.5L;
    return static_cast<double>(u * u + 0.25L);
}

double kernelMomentHolder(double theta, double p) {
    validateTheta(theta);
    if (!(p > 0.0))
        throw InvalidArgument("kernel moment requires p > 0");
    if (p == 1.0)
        return kernelMomentPm(theta);
    return (std::pow(theta, p + 1.0) + std::pow(1.0 - theta, p + 1.0)) / (p + 1.0);
}

double supDerivativeTerm(const RealFn& df, double x, double c, double q) {
    validateQ(q);
    return std::max(std::fabs(df(x)), std::fabs(df(c)));
}

double boundPowerMean(RuleParams p, Interval iv, const RealFn& df, double q) {
    validate(p);
    validate(iv);
    validateQ(q);
    return iv.width() * kernelMomentPm(p.theta) * weightedSupTerms(p, iv, df, q);
}

double boundHolder(RuleParams p, Interval iv, const RealFn& df, double q) {
    validate(p);
    validate(iv);
    ExponentPair pq = conjugate(q);
    double kernel = std::pow(kernelMomentHolder(p.theta, pq.p), 1.0 / pq.p);
    return iv.width() * kernel * weightedSupTerms(p, iv, df, q);
}

double bestBound(RuleParams p, Interval iv, const RealFn& df, double q) {
    double pm = boundPowerMean(p, iv, df, q);
    if (q == 1.0)
        return pm;
    return std::min(pm, boundHolder(p, iv, df, q));
}

double classicalSimpsonBound(Interval iv, double sup_f4) {
    validate(iv);
    if (!(sup_f4 >= 0.0))
        throw InvalidArgument("sup|f''''| must be non-negative");
    double w = iv.width();
    return sup_f4 * (w * w) * (w * w) / 2880.0;
}

double validitySlack(double bound) {
    return 1e-14 + 1e-12 * bound;
}

BoundReport boundReport(RuleParams p, Interval iv, const RealFn& f, const RealFn& df, double q,
                        double reference_mean) {
    BoundReport r;
    r.rule_value = evaluateRule(p, iv, f);
    r.reference_mean = reference_mean;
    r.actual_error = std::fabs(r.rule_value - reference_mean);
    r.bound_power_mean = boundPowerMean(p, iv, df, q);
    r.pm_valid = r.actual_error <= r.bound_power_mean + validitySlack(r.bound_power_mean);
    if (q > 1.0) {
        r.bound_holder = boundHolder(p, iv, df, q);
        r.holder_valid = r.actual_error <= *r.bound_holder + validitySlack(*r.bound_holder);
    }
    return r;
}

} // namespace qbound
