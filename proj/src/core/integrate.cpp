#include "integrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "analysis.hpp"
#include "errors.hpp"

namespace qbound {

namespace {

struct WorkItem {
    double a = 0.0;
    double b = 0.0;
    double bound = 0.0;
    std::size_t depth = 0;
};

// Max-heap priority: larger bound first, ties to the leftmost piece.
bool lowerPriority(const WorkItem& x, const WorkItem& y) {
    if (x.bound != y.bound) return x.bound < y.bound;
    return x.a > y.a;
}

// bestBound certifies the MEAN error |rule - mean| <= width x kernel x sup
// terms; multiplying by the width converts it to the integral scale, so the
// local certificate carries a width^2 factor.
double localBound(RuleParams p, Interval piece, const RealFn& df, double q) {
    return piece.width() * bestBound(p, piece, df, q);
}

CertifiedResult assembleResult(std::vector<WorkItem>&& items, RuleParams p, const RealFn& f,
                               bool converged) {
    std::sort(items.begin(), items.end(),
              [](const WorkItem& x, const WorkItem& y) { return x.a < y.a; });
    CertifiedResult result;
    result.converged = converged;
    result.subintervals.reserve(items.size());
    double estimate = 0.0;
    double total = 0.0;
    for (const WorkItem& it : items) {
        Interval piece{it.a, it.b};
        estimate += piece.width() * evaluateRule(p, piece, f);
        total += it.bound;
        result.subintervals.push_back(SubintervalBound{piece, it.bound});
    }
    result.integral_estimate = estimate;
    result.certified_bound = total;
    return result;
}

double boundSum(const std::vector<WorkItem>& heap, const std::vector<WorkItem>& frozen) {
    double s = 0.0;
    for (const WorkItem& it : heap) s += it.bound;
    for (const WorkItem& it : frozen) s += it.bound;
    return s;
}

} // namespace

CertifiedResult certifiedIntegrate(const RealFn& f, const RealFn& df, Interval iv, RuleParams p,
                                   double q, double tol, std::size_t max_depth,
                                   bool skip_qc_check) {
    validate(p);
    validate(iv);
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");

    if (!skip_qc_check) {
        RealFn abs_df = [&df](double x) { return std::abs(df(x)); };
        QuasiConvexityReport report = checkQuasiconvex(abs_df, iv);
        if (!report.is_quasiconvex)
            throw NotQuasiConvex("|f'| fails the quasi-convexity check on the interval",
                                 report.max_violation);
    }

    std::vector<WorkItem> heap;
    std::vector<WorkItem> frozen; // pieces at max_depth or below fp resolution
    heap.push_back(WorkItem{iv.a, iv.b, localBound(p, iv, df, q), 0});

    // `total` tracks the bound incrementally; the exact re-sum below guards
    // the converged flag against accumulated drift.
    double total = heap.front().bound;
    while (true) {
        while (total > tol && !heap.empty()) {
            std::pop_heap(heap.begin(), heap.end(), lowerPriority);
            WorkItem worst = heap.back();
            heap.pop_back();
            double m = 0.5 * (worst.a + worst.b);
            if (worst.depth >= max_depth || !(worst.a < m && m < worst.b)) {
                frozen.push_back(worst);
                continue;
            }
            WorkItem left{worst.a, m, localBound(p, Interval{worst.a, m}, df, q),
                          worst.depth + 1};
            WorkItem right{m, worst.b, localBound(p, Interval{m, worst.b}, df, q),
                           worst.depth + 1};
            total += left.bound + right.bound - worst.bound;
            heap.push_back(left);
            std::push_heap(heap.begin(), heap.end(), lowerPriority);
            heap.push_back(right);
            std::push_heap(heap.begin(), heap.end(), lowerPriority);
        }
        total = boundSum(heap, frozen);
        if (total <= tol || heap.empty()) break;
    }

    bool converged = total <= tol;
    heap.insert(heap.end(), frozen.begin(), frozen.end());
    return assembleResult(std::move(heap), p, f, converged);
}

CertifiedResult compositeFixed(const RealFn& f, const RealFn& df, Interval iv, RuleParams p,
                               double q, std::size_t n_subintervals) {
    validate(p);
    validate(iv);
    if (n_subintervals < 1) throw InvalidArgument("need at least one subinterval");

    std::vector<double> cuts(n_subintervals + 1);
    for (std::size_t i = 0; i <= n_subintervals; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(n_subintervals);
        cuts[i] = std::lerp(iv.a, iv.b, t);
    }
    std::vector<WorkItem> items;
    items.reserve(n_subintervals);
    for (std::size_t i = 0; i < n_subintervals; ++i) {
        if (!(cuts[i] < cuts[i + 1]))
            throw InvalidArgument("subinterval count exceeds the interval's resolution");
        Interval piece{cuts[i], cuts[i + 1]};
        items.push_back(WorkItem{piece.a, piece.b, localBound(p, piece, df, q), 0});
    }
    return assembleResult(std::move(items), p, f, true);
}

} // namespace qbound
