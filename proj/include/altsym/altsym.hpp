#ifndef ALTSYM_ALTSYM_HPP
#define ALTSYM_ALTSYM_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altsym/cycle_type.hpp"
#include "altsym/jordan.hpp"
#include "altsym/numtheory.hpp"
#include "altsym/perm.hpp"
#include "altsym/primitive.hpp"
#include "altsym/sampler.hpp"

namespace altsym {

enum class Strategy { altsym, cameron_cannon, large_prime };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::altsym: return "altsym";
        case Strategy::cameron_cannon: return "cameron_cannon";
        case Strategy::large_prime: return "large_prime";
    }
    return "?";
}

/// One-sided result. giant_proven = true is always correct (A_n <= G);
/// false carries no claim.
struct Verdict {
    bool giant_proven = false;
    std::optional<JordanCertificate> jordan;
    std::vector<std::uint64_t> remaining_r;
    std::uint64_t elements_examined = 0;
    std::uint64_t elements_skipped = 0;
    bool transitive = false;
    // Time accounting for the cycle-type analysis, excluding element
    // generation; used to confirm generation dominates.
    double jordan_seconds = 0;
    double eliminate_seconds = 0;
};

/// Core of the algorithm, fed cycle types from any source (random group
/// elements or sampled types). Transitivity is assumed here.
template <class TypeSource>
Verdict run_core_on_types(std::uint64_t n, Strategy strategy, std::uint64_t k,
                          TypeSource&& next_type, FactorCache& cache) {
    using clock = std::chrono::steady_clock;
    Verdict v;
    v.transitive = true;

    if (strategy == Strategy::large_prime) {
        for (std::uint64_t i = 0; i < k; ++i) {
            CycleType t = next_type();
            ++v.elements_examined;
            if (has_large_prime_cycle(t)) {
                v.giant_proven = true;
                return v;
            }
        }
        return v;
    }

    const bool use_subset_sum = (strategy == Strategy::altsym);
    const double cycle_cap = 2.0 * std::log(static_cast<double>(n));
    BlockFilter filter(n, cache);
    bool jordan = false;

    for (std::uint64_t i = 0; i < k; ++i) {
        if (jordan && filter.empty()) break;
        CycleType t = next_type();
        ++v.elements_examined;
        // An element with >= 2 log n cycles is evidence against a giant;
        // it is skipped but still consumes an iteration.
        if (static_cast<double>(num_cycles(t)) >= cycle_cap) {
            ++v.elements_skipped;
            continue;
        }
        if (!jordan) {
            auto t0 = clock::now();
            v.jordan = jordan_test(t, cache);
            v.jordan_seconds +=
                std::chrono::duration<double>(clock::now() - t0).count();
            jordan = v.jordan.has_value();
        }
        auto t1 = clock::now();
        filter.eliminate(t, cache, use_subset_sum);
        v.eliminate_seconds +=
            std::chrono::duration<double>(clock::now() - t1).count();
    }
    v.remaining_r = filter.remaining();
    v.giant_proven = jordan && filter.empty();
    return v;
}

inline Verdict core_on_types(std::uint64_t n, std::span<const CycleType> types,
                             std::uint64_t k, FactorCache& cache,
                             Strategy strategy = Strategy::altsym) {
    std::size_t idx = 0;
    std::uint64_t budget = std::min<std::uint64_t>(k, types.size());
    for (const CycleType& t : types)
        if (t.degree() != n)
            throw std::invalid_argument("core_on_types: degree mismatch");
    return run_core_on_types(n, strategy, budget,
                             [&]() -> CycleType { return types[idx++]; }, cache);
}

/// Full test on a generated group: transitivity gate, then up to k random
/// elements from a product-replacement pool.
inline Verdict run_test(const GeneratorSet& g, std::uint64_t k,
                        RandomSource& rng,
                        Strategy strategy = Strategy::altsym) {
    if (g.degree < 1) throw std::invalid_argument("degree must be >= 1");
    FactorCache cache;
    if (!is_transitive(g)) {
        Verdict v;
        v.transitive = false;
        return v;
    }
    ReplacementPool pool(g, rng);
    Verdict v = run_core_on_types(
        g.degree, strategy, k,
        [&]() { return cycle_structure(pool.random_element(rng)); }, cache);
    v.transitive = true;
    return v;
}

inline Verdict altsym_test(const GeneratorSet& g, std::uint64_t k,
                           RandomSource& rng) {
    return run_test(g, k, rng, Strategy::altsym);
}

inline Verdict cameron_cannon_test(const GeneratorSet& g, std::uint64_t k,
                                   RandomSource& rng) {
    return run_test(g, k, rng, Strategy::cameron_cannon);
}

inline Verdict large_prime_test(const GeneratorSet& g, std::uint64_t k,
                                RandomSource& rng) {
    return run_test(g, k, rng, Strategy::large_prime);
}

} // namespace altsym

#endif
