#ifndef ALTSYM_KTABLE_HPP
#define ALTSYM_KTABLE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace altsym {

// Published experimental k(N, epsilon) values for the main strategy,
// even degrees. Used only to map a requested error bound to a sample
// count; the mapping below 0.01 is a doubling heuristic, not a proof.
namespace ktable {

inline constexpr std::array<std::uint64_t, 11> kDegrees = {
    10, 20, 30, 50, 100, 1000, 10'000, 100'000,
    1'000'000, 100'000'000, 1'000'000'000'000ULL};

inline constexpr std::array<double, 4> kEpsilons = {0.1, 0.05, 0.02, 0.01};

inline constexpr std::uint64_t kValues[11][4] = {
    {6, 6, 8, 9},  // 10
    {4, 5, 6, 6},  // 20
    {4, 4, 5, 6},  // 30
    {3, 3, 4, 5},  // 50
    {3, 3, 4, 4},  // 100
    {2, 2, 3, 3},  // 1000
    {2, 2, 2, 2},  // 10^4
    {1, 2, 2, 2},  // 10^5
    {1, 1, 2, 2},  // 10^6
    {1, 1, 1, 2},  // 10^8
    {1, 1, 1, 1},  // 10^12
};

/// Nearest tabulated degree at or below n (degrees below 10 use the
/// first row). For epsilon below 0.01, k doubles per factor-100
/// reduction, a geometric upper-bound heuristic.
inline std::uint64_t k_for(std::uint64_t n, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must be in (0,1)");
    std::size_t row = 0;
    for (std::size_t i = 0; i < kDegrees.size(); ++i)
        if (kDegrees[i] <= n) row = i;
    // Strictest tabulated epsilon that still covers the request, i.e.
    // the first column whose bound is <= epsilon.
    std::size_t col = kEpsilons.size() - 1;
    for (std::size_t j = 0; j < kEpsilons.size(); ++j)
        if (kEpsilons[j] <= epsilon) { col = j; break; }
    std::uint64_t k = kValues[row][col];
    if (epsilon < kEpsilons.back()) {
        double factor = kEpsilons.back() / epsilon;
        auto doublings =
            static_cast<unsigned>(std::ceil(std::log(factor) / std::log(100.0)));
        k <<= doublings;
    }
    return k;
}

} // namespace ktable
} // namespace altsym

#endif
