#include <cmath>
#include <vector>

#include "doctest.h"

#include "core/bounds.hpp"
#include "core/expr.hpp"
#include "core/rules.hpp"
#include "support.hpp"

using qbound::Interval;
using qbound::InvalidArgument;
using qbound::Preset;
using qbound::RuleParams;
using qbound::UnsupportedExponent;
using testsupport::Rng;

namespace {

// Independent check of the kernel moments: composite midpoint quadrature of
// |t - theta|^p over [0,1]. The integrand is continuous and piecewise smooth,
// so half a million panels leave an error well under 1e-9.
double kernelOracle(double theta, double p) {
    const int n = 1 << 19;
    double h = 1.0 / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = (i + 0.5) * h;
        acc += std::pow(std::fabs(t - theta), p);
    }
    return acc * h;
}

} // namespace

TEST_CASE("conjugate exponents") {
    CHECK(qbound::conjugate(2.0).p == 2.0);
    CHECK(qbound::conjugate(1.5).p == 3.0);
    CHECK(qbound::conjugate(3.0).p == 1.5);
    CHECK_THROWS_AS(qbound::conjugate(1.0), UnsupportedExponent);
    CHECK_THROWS_AS(qbound::conjugate(0.5), UnsupportedExponent);
}

TEST_CASE("first kernel moment closed forms") {
    CHECK(qbound::kernelMomentPm(2.0 / 3.0) == doctest::Approx(5.0 / 18.0).epsilon(1e-16));
    CHECK(qbound::kernelMomentPm(0.5) == 0.25);
    CHECK(qbound::kernelMomentPm(0.0) == 0.5);
    CHECK(qbound::kernelMomentPm(1.0) == 0.5);
    CHECK_THROWS_AS(qbound::kernelMomentPm(-0.1), InvalidArgument);
    CHECK_THROWS_AS(qbound::kernelMomentPm(1.5), InvalidArgument);

    // Exact symmetry on exactly-complementary parameter pairs.
    for (double theta : {0.0, 0.125, 0.25, 0.375, 0.5}) {
        CHECK(qbound::kernelMomentPm(theta) == qbound::kernelMomentPm(1.0 - theta));
    }
}

TEST_CASE("p-th kernel moment matches quadrature oracle") {
    CHECK(qbound::kernelMomentHolder(2.0 / 3.0, 2.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(qbound::kernelMomentHolder(0.0, 2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    for (double theta : {0.0, 0.2, 0.5, 2.0 / 3.0, 0.9}) {
        for (double p : {1.5, 2.0, 3.0}) {
            CAPTURE(theta);
            CAPTURE(p);
            CHECK(qbound::kernelMomentHolder(theta, p) ==
                  doctest::Approx(kernelOracle(theta, p)).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(qbound::kernelMomentHolder(0.5, 0.0), InvalidArgument);
    CHECK_THROWS_AS(qbound::kernelMomentHolder(0.5, -1.0), InvalidArgument);
}

TEST_CASE("p == 1 kernel moment takes the first-moment path bit-for-bit") {
    for (int i = 0; i <= 10; ++i) {
        double theta = i / 10.0;
        CHECK(qbound::kernelMomentHolder(theta, 1.0) == qbound::kernelMomentPm(theta));
    }
}

TEST_CASE("p-norm of the kernel is non-decreasing in p") {
    const std::vector<double> ps = {1.0, 1.5, 2.0, 4.0, 10.0};
    for (int i = 0; i <= 10; ++i) {
        double theta = i / 10.0;
        double prev = -1.0;
        for (double p : ps) {
            double norm = std::pow(qbound::kernelMomentHolder(theta, p), 1.0 / p);
            CHECK(norm >= prev - 1e-15);
            prev = norm;
        }
    }
}

TEST_CASE("p-norm near p = 1 stays close to the first moment") {
    for (int i = 0; i <= 10; ++i) {
        double theta = i / 10.0;
        double p = 1.0 + 1e-4;
        double norm = std::pow(qbound::kernelMomentHolder(theta, p), 1.0 / p);
        CHECK(std::fabs(norm - qbound::kernelMomentPm(theta)) < 1e-3);
    }
}

TEST_CASE("sup derivative term") {
    auto df = [](double x) { return 2.0 * x; };
    CHECK(qbound::supDerivativeTerm(df, 0.0, 0.5, 2.0) == 1.0);
    CHECK(qbound::supDerivativeTerm(df, 1.0, 0.5, 2.0) == 2.0);
    CHECK(qbound::supDerivativeTerm(df, -3.0, 0.5, 1.0) == 6.0);
    CHECK_THROWS_AS(qbound::supDerivativeTerm(df, 0.0, 0.5, 0.5), InvalidArgument);
}

TEST_CASE("power-mean bound on x^2 over the unit interval") {
    Interval unit{0.0, 1.0};
    auto df = [](double x) { return 2.0 * x; };
    // Midpoint: kernel 1/2, sup terms 1/4 * 1 + 1/4 * 2 = 3/4 -> 3/8.
    CHECK(qbound::boundPowerMean(qbound::preset(Preset::Midpoint), unit, df, 2.0) ==
          doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    // Same configuration via the conjugate route at q = 2: 3/(4 sqrt(3)).
    CHECK(qbound::boundHolder(qbound::preset(Preset::Midpoint), unit, df, 2.0) ==
          doctest::Approx(3.0 / (4.0 * std::sqrt(3.0))).epsilon(1e-15));
}

TEST_CASE("per-endpoint coefficient reductions") {
    // Zeroing the derivative everywhere except one endpoint isolates that
    // endpoint's coefficient: (b-a) * kernel * lambda^2.
    Interval unit{0.0, 1.0};
    auto spikeAtA = [](double x) { return x == 0.0 ? 1.0 : 0.0; };
    double simpson = qbound::boundPowerMean(qbound::preset(Preset::Simpson), unit, spikeAtA, 2.0);
    double midpoint = qbound::boundPowerMean(qbound::preset(Preset::Midpoint), unit, spikeAtA, 2.0);
    double trapezoid =
        qbound::boundPowerMean(qbound::preset(Preset::Trapezoid), unit, spikeAtA, 2.0);
    CHECK(testsupport::ulpDistance(simpson, 5.0 / 72.0) <= 4.0);
    CHECK(testsupport::ulpDistance(midpoint, 1.0 / 8.0) <= 4.0);
    CHECK(testsupport::ulpDistance(trapezoid, 1.0 / 8.0) <= 4.0);

    for (double p : {1.5, 2.0, 3.0}) {
        double q = p / (p - 1.0);
        double trap = qbound::boundHolder(qbound::preset(Preset::Trapezoid), unit, spikeAtA, q);
        double want = 1.0 / (4.0 * std::pow(p + 1.0, 1.0 / p));
        CHECK(testsupport::ulpDistance(trap, want) <= 4.0);

        double simp = qbound::boundHolder(qbound::preset(Preset::Simpson), unit, spikeAtA, q);
        double wantS =
            (1.0 / 12.0) * std::pow((1.0 + std::pow(2.0, p + 1.0)) / (3.0 * (p + 1.0)), 1.0 / p);
        CHECK(testsupport::ulpDistance(simp, wantS) <= 4.0);
    }
}

TEST_CASE("power-mean bound does not depend on q") {
    Rng rng(31);
    auto df = [](double x) { return std::exp(x) + x; };
    for (int i = 0; i < 100; ++i) {
        RuleParams p{rng.uniform(), rng.uniform()};
        Interval iv{rng.uniform(-2.0, 0.0), rng.uniform(0.5, 3.0)};
        double base = qbound::boundPowerMean(p, iv, df, 1.0);
        for (double q : {2.0, 10.0, 1000.0}) {
            CHECK(qbound::boundPowerMean(p, iv, df, q) == base);
        }
    }
}

TEST_CASE("best bound is the applicable minimum") {
    Interval unit{0.0, 1.0};
    auto df = [](double x) { return 2.0 * x; };
    RuleParams mid = qbound::preset(Preset::Midpoint);
    double pm = qbound::boundPowerMean(mid, unit, df, 2.0);
    double ho = qbound::boundHolder(mid, unit, df, 2.0);
    CHECK(qbound::bestBound(mid, unit, df, 2.0) == std::fmin(pm, ho));
    // At q = 1 the conjugate route is undefined; best falls back to power-mean.
    CHECK(qbound::bestBound(mid, unit, df, 1.0) == qbound::boundPowerMean(mid, unit, df, 1.0));
    CHECK_THROWS_AS(qbound::boundHolder(mid, unit, df, 1.0), UnsupportedExponent);
}

TEST_CASE("classical quartic remainder for the simpson rule") {
    Interval unit{0.0, 1.0};
    // f = x^4: sup|f''''| = 24, bound = 24/2880 = 1/120, attained exactly.
    double bound = qbound::classicalSimpsonBound(unit, 24.0);
    CHECK(bound == doctest::Approx(1.0 / 120.0).epsilon(1e-16));
    auto quartic = [](double x) { return x * x * x * x; };
    double rule = qbound::evaluateRule(qbound::preset(Preset::Simpson), unit, quartic);
    double err = std::fabs(rule - 0.2);
    CHECK(std::fabs(err - bound) < 1e-14);

    // Cubics carry no quartic remainder at all.
    CHECK(qbound::classicalSimpsonBound(unit, 0.0) == 0.0);
    auto cubic = [](double x) { return x * x * x; };
    double cubicRule = qbound::evaluateRule(qbound::preset(Preset::Simpson), unit, cubic);
    CHECK(std::fabs(cubicRule - 0.25) < 1e-15);

    // Width enters at the fourth power.
    CHECK(qbound::classicalSimpsonBound({0.0, 2.0}, 24.0) ==
          doctest::Approx(16.0 / 120.0).epsilon(1e-15));
    CHECK_THROWS_AS(qbound::classicalSimpsonBound(unit, -1.0), InvalidArgument);
}

TEST_CASE("bound report flags validity against a supplied mean") {
    Interval unit{0.0, 1.0};
    auto f = [](double x) { return x * x; };
    auto df = [](double x) { return 2.0 * x; };
    qbound::BoundReport r =
        qbound::boundReport(qbound::preset(Preset::Midpoint), unit, f, df, 2.0, 1.0 / 3.0);
    CHECK(r.rule_value == 0.25);
    CHECK(r.actual_error == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(r.bound_power_mean == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK(r.bound_holder.has_value());
    CHECK(r.pm_valid);
    CHECK(r.holder_valid);

    qbound::BoundReport r1 =
        qbound::boundReport(qbound::preset(Preset::Midpoint), unit, f, df, 1.0, 1.0 / 3.0);
    CHECK_FALSE(r1.bound_holder.has_value());
    CHECK_FALSE(r1.holder_valid);
    CHECK(r1.pm_valid);
}

TEST_CASE("bounds dominate the true error across a smooth corpus") {
    struct Fn {
        const char* src;
        Interval iv;
        double mean;
    };
    const std::vector<Fn> corpus = {
        {"x^2", {0.0, 1.0}, 1.0 / 3.0},
        {"x^3", {0.0, 1.0}, 0.25},
        {"x^6", {0.0, 1.0}, 1.0 / 7.0},
        {"exp(x)", {0.0, 1.0}, std::exp(1.0) - 1.0},
        {"1/x", {1.0, 3.0}, std::log(3.0) / 2.0},
    };
    for (const auto& fn : corpus) {
        qbound::Expr e = qbound::Expr::parse(fn.src);
        auto f = qbound::exprValueFn(e);
        auto df = qbound::exprDerivativeFn(e);
        for (Preset which : {Preset::Simpson, Preset::Midpoint, Preset::Trapezoid}) {
            for (double q : {1.0, 1.5, 2.0, 5.0, 10.0}) {
                CAPTURE(fn.src);
                CAPTURE(q);
                qbound::BoundReport r =
                    qbound::boundReport(qbound::preset(which), fn.iv, f, df, q, fn.mean);
                CHECK(r.pm_valid);
                if (q > 1.0)
                    CHECK(r.holder_valid);
            }
        }
    }
}
