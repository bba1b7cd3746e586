#ifndef ALTSYM_SAMPLER_HPP
#define ALTSYM_SAMPLER_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "altsym/cycle_type.hpp"
#include "altsym/perm.hpp"

namespace altsym {

/// Counter-based deterministic generator with splittable streams.
/// Identical (seed, stream) gives identical output on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(mix(seed ^ 0x9E3779B97F4A7C15ULL) ^ stream)), counter_(0) {}

    std::uint64_t next_u64() {
        return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_);
    }

    /// Uniform on [lo, hi], unbiased via rejection.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi) throw std::invalid_argument("uniform: empty range");
        std::uint64_t range = hi - lo + 1;
        if (range == 0) return next_u64(); // full 64-bit range
        std::uint64_t threshold = (0 - range) % range;
        for (;;) {
            std::uint64_t v = next_u64();
            if (v >= threshold) return lo + v % range;
        }
    }

    bool coin() { return next_u64() & 1; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30; z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27; z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_;
};

/// Stick-breaking sampler: repeatedly cut a uniform first-cycle length
/// from the remaining points. The resulting type has exactly the law of
/// the cycle type of a uniform element of S_n.
inline CycleType random_cycle_type(std::uint64_t n, RandomSource& rng) {
    if (n < 1) throw std::invalid_argument("random_cycle_type: n must be >= 1");
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t remaining = n;
    while (remaining > 0) {
        std::uint64_t len = rng.uniform(1, remaining);
        ++counts[len];
        remaining -= len;
    }
    std::vector<CycleType::Part> parts;
    for (auto [len, mult] : counts) parts.push_back({len, mult});
    return CycleType(n, std::move(parts));
}

/// Rejection-samples until the parity is even; uniform over A_n types.
inline CycleType random_even_cycle_type(std::uint64_t n, RandomSource& rng) {
    if (n < 2) throw std::invalid_argument("random_even_cycle_type: n must be >= 2");
    for (;;) {
        CycleType t = random_cycle_type(n, rng);
        if (sign_of_type(t) == Parity::even) return t;
    }
}

/// Product-replacement pool (accumulator / "rattle" variant). Every slot
/// stays a product of the original generators, so outputs never leave
/// the generated group.
class ReplacementPool {
public:
    // Slot word length grows with updates per slot, so the mixing budget
    // must scale with log(degree) or large-degree elements stay short
    // words in the generators with badly skewed cycle types.
    static int initial_mixing_steps(std::size_t degree) {
        int bits = 0;
        while (degree >> bits) ++bits;
        return std::max(60, 24 * bits);
    }

    ReplacementPool(const GeneratorSet& g, RandomSource& rng) {
        if (g.generators.empty())
            throw std::invalid_argument("pool_init: empty generator set");
        std::size_t size = std::max<std::size_t>(10, 2 * g.generators.size());
        for (std::size_t i = 0; i < size; ++i)
            slots_.push_back(g.generators[i % g.generators.size()]);
        accumulator_ = Permutation::identity(g.degree);
        const int mixing = initial_mixing_steps(g.degree);
        for (int i = 0; i < mixing; ++i) step(rng);
    }

    /// One replacement step; returns the updated accumulator.
    const Permutation& random_element(RandomSource& rng) {
        step(rng);
        return accumulator_;
    }

    const std::vector<Permutation>& slots() const { return slots_; }
    std::uint64_t steps_taken() const { return steps_taken_; }

private:
    void step(RandomSource& rng) {
        std::size_t i = rng.uniform(0, slots_.size() - 1);
        std::size_t j = rng.uniform(0, slots_.size() - 2);
        if (j >= i) ++j; // j != i, uniform over the rest
        const Permutation& other =
            rng.coin() ? slots_[j] : (inverse_scratch_ = inverse(slots_[j]));
        slots_[i] = compose(slots_[i], other);
        accumulator_ = compose(accumulator_, slots_[i]);
        ++steps_taken_;
    }

    std::vector<Permutation> slots_;
    Permutation accumulator_;
    Permutation inverse_scratch_;
    std::uint64_t steps_taken_ = 0;
};

} // namespace altsym

#endif
