#ifndef QBOUND_CORE_RULES_HPP
#define QBOUND_CORE_RULES_HPP

#include <optional>
#include <string_view>

#include "expr.hpp"

namespace qbound {

/// Member of the two-parameter rule family
///   R(f) = (1-theta)(lambda f(a) + (1-lambda) f(b)) + theta f(C),
/// C = (1-lambda) a + lambda b. Approximates the mean of f over [a,b],
/// not the integral.
struct RuleParams {
    double theta = 0.0;
    double lambda = 0.0;
};

/// Oriented interval with a < b strictly.
struct Interval {
    double a = 0.0;
    double b = 1.0;
    double width() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
};

/// Throws InvalidArgument unless both parameters are finite and in [0,1].
void validate(RuleParams p);

/// Throws InvalidArgument unless finite and a < b.
void validate(Interval iv);

/// The interior node C = (1-lambda) a + lambda b, clamped into [a,b].
double innerNode(RuleParams p, Interval iv);

/// Rule value; approximates (1/(b-a)) * integral of f.
double evaluateRule(RuleParams p, Interval iv, const RealFn& f);

enum class Preset { Simpson, Midpoint, Trapezoid };

/// simpson -> (2/3, 1/2), midpoint -> (1, 1/2), trapezoid -> (0, 1/2).
RuleParams preset(Preset which);

std::optional<Preset> presetFromName(std::string_view name);
std::string_view presetName(Preset which);

} // namespace qbound

#endif
