#ifndef QBOUND_CORE_MEANS_HPP
#define QBOUND_CORE_MEANS_HPP

#include "bounds.hpp"

namespace qbound {

/// A_alpha(a,b) = alpha a + (1-alpha) b. alpha in [0,1].
double weightedArithmetic(double alpha, double a, double b);

/// A(a,b) = (a+b)/2.
double arithmeticMean(double a, double b);

/// H_alpha(a,b) = (alpha/a + (1-alpha)/b)^{-1}. a, b and the combined
/// denominator must be nonzero; alpha in [0,1].
double weightedHarmonic(double alpha, double a, double b);

/// H(a,b) = 2ab/(a+b).
double harmonicMean(double a, double b);

/// L(a,b) = (b-a)/(ln b - ln a). a, b > 0 and a != b; no series fallback
/// near a == b, callers wanting the limit sample nearby points.
double logarithmicMean(double a, double b);

/// L_n(a,b)^n = (b^{n+1}-a^{n+1})/((n+1)(b-a)), evaluated by the
/// cancellation-free power-sum form (sum of a^k b^{n-k})/(n+1). n >= 1,
/// a != b. This is also the mean of x^n over [a,b].
double nLogarithmicMeanPow(int n, double a, double b);

/// L_n(a,b) = nLogarithmicMeanPow^{1/n}. Real roots only: for n >= 2 the
/// radicand must be positive.
double nLogarithmicMean(int n, double a, double b);

/// One inequality instance: a rule-vs-mean gap written in special means on
/// the left, a certified bound on the right.
struct PropositionResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    double slack = 0.0; // rounding headroom admitted by `holds`
};

/// f(x) = x^n, n >= 2:
///   |(1-theta) A_lambda(a^n,b^n) + theta C^n - L_n^n(a,b)|
///     <= power-mean bound with f'(x) = n x^{n-1},
/// C = (1-lambda)a + lambda b. q >= 1. Verifies that |f'| is quasi-convex
/// on the interval before certifying.
PropositionResult propositionPowerPm(int n, RuleParams p, double q, Interval iv);

/// Same left side against the conjugate-exponent bound; q > 1.
PropositionResult propositionPowerHolder(int n, RuleParams p, double q, Interval iv);

/// f(x) = 1/x on 0 < a < b:
///   |(1-theta)/H_lambda(a,b) + theta/C - 1/L(a,b)|
///     <= power-mean bound with f'(x) = -1/x^2. q >= 1.
PropositionResult propositionReciprocalPm(RuleParams p, double q, Interval iv);

/// Same left side against the conjugate-exponent bound; q > 1.
PropositionResult propositionReciprocalHolder(RuleParams p, double q, Interval iv);

} // namespace qbound

#endif
