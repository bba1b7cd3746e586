#ifndef ALTSYM_PRIMITIVE_HPP
#define ALTSYM_PRIMITIVE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "altsym/cycle_type.hpp"
#include "altsym/numtheory.hpp"

namespace altsym {

struct SubsetSumInstance {
    std::vector<std::uint64_t> values;
    std::uint64_t target = 0;
};

namespace detail {

inline std::vector<std::uint64_t> half_sums(const std::uint64_t* v, std::size_t n) {
    std::vector<std::uint64_t> sums{0};
    sums.reserve(std::size_t{1} << n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t base = sums.size();
        for (std::size_t j = 0; j < base; ++j)
            sums.push_back(sums[j] + v[i]);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

} // namespace detail

/// Meet-in-the-middle subset-sum decision, O(2^{L/2} log). The empty
/// subset is allowed, so target 0 is always reachable.
inline bool subset_sum_decision(const SubsetSumInstance& inst) {
    const auto& v = inst.values;
    const std::uint64_t target = inst.target;
    if (v.size() > 64)
        throw std::invalid_argument("subset_sum_decision: more than 64 values");
    if (target == 0) return true;
    std::uint64_t sum = 0, g = 0;
    for (std::uint64_t x : v) {
        if (x == target) return true;
        sum += x;
        g = std::gcd(g, x);
    }
    if (sum < target) return false;
    if (sum == target) return true;
    if (g != 0 && target % g != 0) return false;

    std::size_t half = v.size() / 2;
    auto left = detail::half_sums(v.data(), half);
    auto right = detail::half_sums(v.data() + half, v.size() - half);
    for (std::uint64_t a : left) {
        if (a > target) break;
        if (std::binary_search(right.begin(), right.end(), target - a))
            return true;
    }
    return false;
}

/// Tests whether cycle length ell is compatible with a block system of r
/// blocks of size s = n/r: some block cycle length c must satisfy c | ell,
/// c <= r, ell <= c*s, and (unless relaxed) the other cycles must supply
/// multiples of c summing to c*s - ell. Dropping the subset-sum clause
/// gives the weaker variant used by the comparison strategy.
inline bool exists_valid_c(const CycleType& t, std::uint64_t ell,
                           std::uint64_t r, std::uint64_t s,
                           FactorCache& cache, bool use_subset_sum = true) {
    const std::uint64_t ceil_ell_s = (ell + s - 1) / s;
    for (std::uint64_t c : cache.divisors(ell)) {
        if (c < ceil_ell_s) continue;
        if (c > r) break;
        if (!use_subset_sum) return true;
        // Pool: all cycles except one ell-cycle, kept if divisible by c,
        // pre-divided by c. Target (c*s - ell)/c = s - ell/c.
        const std::uint64_t target = s - ell / c;
        if (target == 0) return true;
        SubsetSumInstance inst;
        inst.target = target;
        bool too_big = false;
        for (const auto& part : t.parts()) {
            if (part.length % c != 0) continue;
            std::uint64_t mult = part.multiplicity;
            if (part.length == ell) --mult;
            if (mult > 64 || inst.values.size() + mult > 64) { too_big = true; break; }
            for (std::uint64_t i = 0; i < mult; ++i)
                inst.values.push_back(part.length / c);
        }
        // Oversized pools are never refuted: stay one-sided.
        if (too_big || subset_sum_decision(inst)) return true;
    }
    return false;
}

/// Live set of not-yet-eliminated block counts r with 1 < r < n, r | n.
class BlockFilter {
public:
    explicit BlockFilter(std::uint64_t n, FactorCache& cache) : degree_(n) {
        for (std::uint64_t d : cache.divisors(n))
            if (d > 1 && d < n) remaining_.push_back(d);
    }

    std::uint64_t degree() const { return degree_; }
    const std::vector<std::uint64_t>& remaining() const { return remaining_; }
    bool empty() const { return remaining_.empty(); }

    /// Removes every r for which some cycle length of t admits no valid
    /// block cycle length c. Never removes the true block count of a
    /// transitive group containing an element of type t.
    void eliminate(const CycleType& t, FactorCache& cache,
                   bool use_subset_sum = true) {
        if (t.degree() != degree_)
            throw std::invalid_argument("eliminate: degree mismatch");
        std::erase_if(remaining_, [&](std::uint64_t r) {
            const std::uint64_t s = degree_ / r;
            for (const auto& part : t.parts())
                if (!exists_valid_c(t, part.length, r, s, cache, use_subset_sum))
                    return true;
            return false;
        });
    }

private:
    std::uint64_t degree_;
    std::vector<std::uint64_t> remaining_;
};

/// True implies any transitive group containing an element of type t is
/// primitive. Vacuously true at prime degree.
inline bool primitive_test(const CycleType& t, FactorCache& cache) {
    BlockFilter f(t.degree(), cache);
    f.eliminate(t, cache);
    return f.empty();
}

} // namespace altsym

#endif
