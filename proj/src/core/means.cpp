#include "means.hpp"

#include <cmath>
#include <string>

#include "analysis.hpp"
#include "errors.hpp"

namespace qbound {

namespace {

void validateAlpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw InvalidArgument("weight must lie in [0,1], got " + std::to_string(alpha));
}

void validateFinite(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw InvalidArgument("mean arguments must be finite");
}

} // namespace

double weightedArithmetic(double alpha, double a, double b) {
    validateAlpha(alpha);
    validateFinite(a, b);
    return alpha * a + (1.0 - alpha) * b;
}

double arithmeticMean(double a, double b) {
    validateFinite(a, b);
    return 0.5 * (a + b);
}

double weightedHarmonic(double alpha, double a, double b) {
    validateAlpha(alpha);
    validateFinite(a, b);
    if (a == 0.0 || b == 0.0) throw DomainError("harmonic mean needs nonzero arguments");
    double denom = alpha / a + (1.0 - alpha) / b;
    if (denom == 0.0) throw DomainError("harmonic mean denominator vanishes");
    return 1.0 / denom;
}

double harmonicMean(double a, double b) { return weightedHarmonic(0.5, a, b); }

double logarithmicMean(double a, double b) {
    validateFinite(a, b);
    if (!(a > 0.0 && b > 0.0)) throw DomainError("logarithmic mean needs positive arguments");
    if (a == b) throw DomainError("logarithmic mean needs distinct arguments");
    // log1p of the relative gap == ln b - ln a, without the cancellation of
    // subtracting two nearby logarithms.
    return (b - a) / std::log1p((b - a) / a);
}

double nLogarithmicMeanPow(int n, double a, double b) {
    validateFinite(a, b);
    if (n < 1) throw InvalidArgument("n-logarithmic mean needs n >= 1");
    if (a == b) throw DomainError("n-logarithmic mean needs distinct arguments");
    // (b^{n+1} - a^{n+1}) / ((n+1)(b-a)) = (sum over k of a^k b^{n-k}) / (n+1);
    // the sum form has no cancellation between the two powers.
    double s = 1.0;
    double bp = 1.0;
    for (int k = 1; k <= n; ++k) {
        bp *= b;
        s = s * a + bp;
    }
    return s / static_cast<double>(n + 1);
}

double nLogarithmicMean(int n, double a, double b) {
    double radicand = nLogarithmicMeanPow(n, a, b);
    if (n == 1) return radicand; // first root is the identity; keeps L_1 == A exact
    if (!(radicand > 0.0)) throw DomainError("n-logarithmic mean needs a positive radicand");
    return std::pow(radicand, 1.0 / static_cast<double>(n));
}

namespace {

PropositionResult assemble(double lhs, double rhs) {
    PropositionResult r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = validitySlack(rhs);
    r.holds = lhs <= rhs + r.slack;
    return r;
}

void requireQuasiconvexDerivative(const RealFn& abs_df, Interval iv) {
    QuasiConvexityReport report = checkQuasiconvex(abs_df, iv);
    if (!report.is_quasiconvex)
        throw NotQuasiConvex("|f'| is not quasi-convex on the interval", report.max_violation);
}

// |(1-theta) A_lambda(a^n, b^n) + theta C^n - L_n^n|: the rule for f = x^n
// written purely in special means.
double powerLhs(int n, RuleParams p, Interval iv) {
    double c = weightedArithmetic(p.lambda, iv.b, iv.a);
    double endpoints = weightedArithmetic(p.lambda, powInt(iv.a, n), powInt(iv.b, n));
    double rule = (1.0 - p.theta) * endpoints + p.theta * powInt(c, n);
    return std::abs(rule - nLogarithmicMeanPow(n, iv.a, iv.b));
}

// |(1-theta)/H_lambda(a,b) + theta/C - 1/L(a,b)|: the rule for f = 1/x
// written purely in special means.
double reciprocalLhs(RuleParams p, Interval iv) {
    if (!(iv.a > 0.0)) throw DomainError("reciprocal proposition needs 0 < a < b");
    double c = weightedArithmetic(p.lambda, iv.b, iv.a);
    double endpoints = 1.0 / weightedHarmonic(p.lambda, iv.a, iv.b);
    double rule = (1.0 - p.theta) * endpoints + p.theta / c;
    return std::abs(rule - 1.0 / logarithmicMean(iv.a, iv.b));
}

void validatePowerN(int n) {
    if (n < 2) throw InvalidArgument("power proposition needs n >= 2");
}

RealFn powerDerivative(int n) {
    return [n](double x) { return static_cast<double>(n) * powInt(x, n - 1); };
}

RealFn reciprocalDerivative() {
    return [](double x) {
        if (x == 0.0) throw DomainError("derivative of 1/x undefined at 0");
        return -1.0 / (x * x);
    };
}

RealFn magnitude(RealFn f) {
    return [f = std::move(f)](double x) { return std::abs(f(x)); };
}

} // namespace

PropositionResult propositionPowerPm(int n, RuleParams p, double q, Interval iv) {
    validate(p);
    validate(iv);
    validatePowerN(n);
    RealFn df = powerDerivative(n);
    double rhs = boundPowerMean(p, iv, df, q); // also gates q >= 1
    requireQuasiconvexDerivative(magnitude(df), iv);
    return assemble(powerLhs(n, p, iv), rhs);
}

PropositionResult propositionPowerHolder(int n, RuleParams p, double q, Interval iv) {
    validate(p);
    validate(iv);
    validatePowerN(n);
    RealFn df = powerDerivative(n);
    double rhs = boundHolder(p, iv, df, q); // also gates q > 1
    requireQuasiconvexDerivative(magnitude(df), iv);
    return assemble(powerLhs(n, p, iv), rhs);
}

PropositionResult propositionReciprocalPm(RuleParams p, double q, Interval iv) {
    validate(p);
    validate(iv);
    if (!(iv.a > 0.0)) throw DomainError("reciprocal proposition needs 0 < a < b");
    RealFn df = reciprocalDerivative();
    double rhs = boundPowerMean(p, iv, df, q);
    requireQuasiconvexDerivative(magnitude(df), iv);
    return assemble(reciprocalLhs(p, iv), rhs);
}

PropositionResult propositionReciprocalHolder(RuleParams p, double q, Interval iv) {
    validate(p);
    validate(iv);
    if (!(iv.a > 0.0)) throw DomainError("reciprocal proposition needs 0 < a < b");
    RealFn df = reciprocalDerivative();
    double rhs = boundHolder(p, iv, df, q);
    requireQuasiconvexDerivative(magnitude(df), iv);
    return assemble(reciprocalLhs(p, iv), rhs);
}

} // namespace qbound
