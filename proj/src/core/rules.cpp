#include "rules.hpp"

#include <algorithm>
#include <cmath>

namespace qbound {

void validate(RuleParams p) {
    if (!(p.theta >= 0.0 && p.theta <= 1.0))
        throw InvalidArgument("theta must lie in [0,1]");
    if (!(p.lambda >= 0.0 && p.lambda <= 1.0))
        throw InvalidArgument("lambda must lie in [0,1]");
}

void validate(Interval iv) {
    if (!std::isfinite(iv.a) || !std::isfinite(iv.b))
        throw InvalidArgument("interval endpoints must be finite");
    if (!(iv.a < iv.b))
        throw InvalidArgument("interval requires a < b");
}

double innerNode(RuleParams p, Interval iv) {
    validate(p);
    validate(iv);
    double c = (1.0 - p.lambda) * iv.a + p.lambda * iv.b;
    return std::clamp(c, iv.a, iv.b);
}

double evaluateRule(RuleParams p, Interval iv, const RealFn& f) {
    double c = innerNode(p, iv);
    return (1.0 - p.theta) * (p.lambda * f(iv.a) + (1.0 - p.lambda) * f(iv.b)) + p.theta * f(c);
}

RuleParams preset(Preset which) {
    switch (which) {
    case Preset::Simpson: return RuleParams{2.0 / 3.0, 0.5};
    case Preset::Midpoint: return RuleParams{1.0, 0.5};
    case Preset::Trapezoid: return RuleParams{0.0, 0.5};
    }
    throw InvalidArgument("unknown rule preset");
}

std::optional<Preset> presetFromName(std::string_view name) {
    if (name == "simpson") return Preset::Simpson;
    if (name == "midpoint") return Preset::Midpoint;
    if (name == "trapezoid") return Preset::Trapezoid;
    return std::nullopt;
}

std::string_view presetName(Preset which) {
    switch (which) {
    case Preset::Simpson: return "simpson";
    case Preset::Midpoint: return "midpoint";
    case Preset::Trapezoid: return "trapezoid";
    }
    return "?";
}

} // namespace qbound
