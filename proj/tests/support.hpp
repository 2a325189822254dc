#ifndef QBOUND_TESTS_SUPPORT_HPP
#define QBOUND_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>

namespace testsupport {

// splitmix64: deterministic across platforms, unlike the distributions in
// <random>. Only for reproducible test inputs.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; } // [0,1)

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline double ulpDistance(double a, double b) {
    if (a == b) return 0.0;
    double scale = std::fmax(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) / (scale * 0x1.0p-52);
}

} // namespace testsupport

#endif
