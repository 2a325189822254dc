#include <cmath>
#include <cstddef>
#include <vector>

#include "doctest.h"

#include "core/expr.hpp"
#include "core/integrate.hpp"
#include "support.hpp"

using qbound::CertifiedResult;
using qbound::Interval;
using qbound::InvalidArgument;
using qbound::NotQuasiConvex;
using qbound::Preset;
using qbound::RuleParams;
using testsupport::Rng;

namespace {

double exactPartitionCheck(const CertifiedResult& r, Interval iv) {
    REQUIRE_FALSE(r.subintervals.empty());
    CHECK(r.subintervals.front().piece.a == iv.a);
    CHECK(r.subintervals.back().piece.b == iv.b);
    double widths = 0.0;
    for (std::size_t i = 0; i + 1 < r.subintervals.size(); ++i) {
        CHECK(r.subintervals[i].piece.b == r.subintervals[i + 1].piece.a);
    }
    for (const auto& s : r.subintervals) widths += s.piece.width();
    return widths;
}

} // namespace

TEST_CASE("constant integrand certifies in one piece with bound zero") {
    auto f = [](double) { return 3.0; };
    auto df = [](double) { return 0.0; };
    auto r = qbound::certifiedIntegrate(f, df, {0.0, 2.0}, qbound::preset(Preset::Simpson), 2.0,
                                        1e-12);
    CHECK(r.converged);
    CHECK(r.integral_estimate == 6.0);
    CHECK(r.certified_bound == 0.0);
    CHECK(r.subintervals.size() == 1);
}

TEST_CASE("loose tolerance stops at a single piece") {
    auto f = [](double x) { return x * x; };
    auto df = [](double x) { return 2.0 * x; };
    auto r = qbound::certifiedIntegrate(f, df, {0.0, 1.0}, qbound::preset(Preset::Midpoint), 1.0,
                                        1.0);
    CHECK(r.converged);
    CHECK(r.subintervals.size() == 1);
    // Midpoint value of the mean is 1/4; the certified bound is the width
    // squared times kernel times sup terms = 3/8.
    CHECK(r.integral_estimate == 0.25);
    CHECK(r.certified_bound == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK(r.certified_bound >= std::fabs(r.integral_estimate - 1.0 / 3.0));
}

TEST_CASE("certified bound really contains the true integral") {
    struct Probe {
        const char* src;
        Interval iv;
        double exact;
    };
    const std::vector<Probe> corpus = {
        {"x^2", {0.0, 2.0}, 8.0 / 3.0},
        {"x^3", {0.0, 2.0}, 4.0},
        {"x^6", {0.0, 2.0}, 128.0 / 7.0},
        {"exp(x)", {0.0, 1.0}, std::exp(1.0) - 1.0},
        {"1/x", {1.0, 3.0}, std::log(3.0)},
    };
    for (const auto& probe : corpus) {
        qbound::Expr e = qbound::Expr::parse(probe.src);
        auto f = qbound::exprValueFn(e);
        auto df = qbound::exprDerivativeFn(e);
        for (Preset which : {Preset::Simpson, Preset::Midpoint, Preset::Trapezoid}) {
            for (double q : {1.0, 2.0}) {
                CAPTURE(probe.src);
                CAPTURE(q);
                auto r = qbound::certifiedIntegrate(f, df, probe.iv, qbound::preset(which), q,
                                                    1e-4);
                CHECK(r.converged);
                CHECK(r.certified_bound <= 1e-4);
                CHECK(std::fabs(r.integral_estimate - probe.exact) <= r.certified_bound + 1e-15);
            }
        }
    }
}

TEST_CASE("exp over the unit interval at a tight tolerance") {
    qbound::Expr e = qbound::Expr::parse("exp(x)");
    auto f = qbound::exprValueFn(e);
    auto df = qbound::exprDerivativeFn(e);
    auto r = qbound::certifiedIntegrate(f, df, {0.0, 1.0}, qbound::preset(Preset::Simpson), 2.0,
                                        1e-6);
    CHECK(r.converged);
    CHECK(r.certified_bound <= 1e-6);
    CHECK(std::fabs(r.integral_estimate - (std::exp(1.0) - 1.0)) <= r.certified_bound);
}

TEST_CASE("partition is exact and sorted") {
    qbound::Expr e = qbound::Expr::parse("exp(x)");
    auto f = qbound::exprValueFn(e);
    auto df = qbound::exprDerivativeFn(e);
    Interval iv{0.25, 1.75};
    auto r = qbound::certifiedIntegrate(f, df, iv, qbound::preset(Preset::Simpson), 2.0, 1e-5);
    double widths = exactPartitionCheck(r, iv);
    CHECK(testsupport::ulpDistance(widths, iv.width()) <=
          4.0 * static_cast<double>(r.subintervals.size()));
    for (std::size_t i = 0; i + 1 < r.subintervals.size(); ++i) {
        CHECK(r.subintervals[i].piece.a < r.subintervals[i + 1].piece.a);
    }
}

TEST_CASE("tightening the tolerance never loosens the result") {
    qbound::Expr e = qbound::Expr::parse("1/x");
    auto f = qbound::exprValueFn(e);
    auto df = qbound::exprDerivativeFn(e);
    double prevBound = INFINITY;
    std::size_t prevCount = 0;
    for (double tol : {1e-2, 1e-3, 1e-4, 1e-5}) {
        auto r = qbound::certifiedIntegrate(f, df, {1.0, 3.0}, qbound::preset(Preset::Midpoint),
                                            2.0, tol);
        CHECK(r.converged);
        CHECK(r.certified_bound <= tol);
        CHECK(r.certified_bound <= prevBound);
        CHECK(r.subintervals.size() >= prevCount);
        prevBound = r.certified_bound;
        prevCount = r.subintervals.size();
    }
}

TEST_CASE("results are deterministic") {
    qbound::Expr e = qbound::Expr::parse("exp(x)*sin(x)+2");
    auto f = qbound::exprValueFn(e);
    auto df = qbound::exprDerivativeFn(e);
    auto a = qbound::certifiedIntegrate(f, df, {0.0, 1.2}, qbound::preset(Preset::Simpson), 2.0,
                                        1e-5, 40, true);
    auto b = qbound::certifiedIntegrate(f, df, {0.0, 1.2}, qbound::preset(Preset::Simpson), 2.0,
                                        1e-5, 40, true);
    CHECK(a.integral_estimate == b.integral_estimate);
    CHECK(a.certified_bound == b.certified_bound);
    REQUIRE(a.subintervals.size() == b.subintervals.size());
    for (std::size_t i = 0; i < a.subintervals.size(); ++i) {
        CHECK(a.subintervals[i].piece.a == b.subintervals[i].piece.a);
        CHECK(a.subintervals[i].local_bound == b.subintervals[i].local_bound);
    }
}

TEST_CASE("depth cap yields a partial but honest result") {
    qbound::Expr e = qbound::Expr::parse("exp(x)");
    auto f = qbound::exprValueFn(e);
    auto df = qbound::exprDerivativeFn(e);
    auto r = qbound::certifiedIntegrate(f, df, {0.0, 1.0}, qbound::preset(Preset::Trapezoid), 2.0,
                                        1e-9, 3);
    CHECK_FALSE(r.converged);
    CHECK(r.certified_bound > 1e-9);
    CHECK(r.subintervals.size() == 8);
    CHECK(std::fabs(r.integral_estimate - (std::exp(1.0) - 1.0)) <= r.certified_bound);
}

TEST_CASE("quasi-convexity gate") {
    // |cos| dips and rises twice on [0, 2pi]; the derivative magnitude of
    // sin is not quasi-convex there.
    auto f = [](double x) { return std::sin(x); };
    auto df = [](double x) { return std::cos(x); };
    Interval iv{0.0, 2.0 * 3.14159265358979323846};
    CHECK_THROWS_AS(qbound::certifiedIntegrate(f, df, iv, qbound::preset(Preset::Simpson), 2.0,
                                               1e-3),
                    NotQuasiConvex);
    // The escape hatch still integrates; the bound merely loses its warranty.
    auto r = qbound::certifiedIntegrate(f, df, iv, qbound::preset(Preset::Simpson), 2.0, 1e-3, 40,
                                        true);
    CHECK(r.converged);
    CHECK(std::fabs(r.integral_estimate) <= r.certified_bound + 1e-12);
}

TEST_CASE("invalid tolerance is rejected") {
    auto f = [](double x) { return x; };
    auto df = [](double) { return 1.0; };
    CHECK_THROWS_AS(qbound::certifiedIntegrate(f, df, {0.0, 1.0},
                                               qbound::preset(Preset::Simpson), 2.0, 0.0),
                    InvalidArgument);
    CHECK_THROWS_AS(qbound::certifiedIntegrate(f, df, {0.0, 1.0},
                                               qbound::preset(Preset::Simpson), 2.0, -1.0),
                    InvalidArgument);
}

TEST_CASE("fixed partition with one piece is the bare rule") {
    auto f = [](double x) { return std::exp(x); };
    auto df = f;
    Interval iv{0.0, 1.0};
    RuleParams p = qbound::preset(Preset::Simpson);
    auto r = qbound::compositeFixed(f, df, iv, p, 2.0, 1);
    CHECK(r.converged);
    CHECK(r.subintervals.size() == 1);
    CHECK(r.integral_estimate == iv.width() * qbound::evaluateRule(p, iv, f));
}

TEST_CASE("fixed partitions are uniform and exact") {
    auto f = [](double x) { return x * x; };
    auto df = [](double x) { return 2.0 * x; };
    Interval iv{0.0, 1.0};
    auto r = qbound::compositeFixed(f, df, iv, qbound::preset(Preset::Midpoint), 2.0, 4);
    REQUIRE(r.subintervals.size() == 4);
    exactPartitionCheck(r, iv);
    CHECK(r.subintervals[1].piece.a == 0.25);
    CHECK(r.subintervals[2].piece.a == 0.5);
    CHECK(r.subintervals[3].piece.a == 0.75);
    CHECK(std::fabs(r.integral_estimate - 1.0 / 3.0) <= r.certified_bound);
    CHECK_THROWS_AS(qbound::compositeFixed(f, df, iv, qbound::preset(Preset::Midpoint), 2.0, 0),
                    InvalidArgument);
}

TEST_CASE("doubling the piece count shrinks the certified bound") {
    qbound::Expr e = qbound::Expr::parse("exp(x)");
    auto f = qbound::exprValueFn(e);
    auto df = qbound::exprDerivativeFn(e);
    Interval iv{0.0, 1.0};
    RuleParams p = qbound::preset(Preset::Trapezoid);
    double b1 = qbound::compositeFixed(f, df, iv, p, 2.0, 1).certified_bound;
    double b2 = qbound::compositeFixed(f, df, iv, p, 2.0, 2).certified_bound;
    double b4 = qbound::compositeFixed(f, df, iv, p, 2.0, 4).certified_bound;
    double b8 = qbound::compositeFixed(f, df, iv, p, 2.0, 8).certified_bound;
    CHECK(b2 < b1);
    CHECK(b4 < b2);
    CHECK(b8 < b4);
    // Width enters the local bound quadratically, so halving the pieces
    // should cut the total by roughly half squared over count doubling: the
    // ratio stays strictly below one.
    CHECK(b2 / b1 < 1.0);
    CHECK(b4 / b2 < 1.0);
}
