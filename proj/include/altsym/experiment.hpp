#ifndef ALTSYM_EXPERIMENT_HPP
#define ALTSYM_EXPERIMENT_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "altsym/altsym.hpp"
#include "altsym/sampler.hpp"

namespace altsym {

enum class ElementClass { sym, alt };

struct Interval {
    double lo = 0;
    double hi = 1;
    bool contains(double p) const { return lo <= p && p <= hi; }
    bool intersects(double lo2, double hi2) const { return lo <= hi2 && lo2 <= hi; }
};

/// Wilson score interval, 95% by default.
inline Interval wilson_interval(std::uint64_t hits, std::uint64_t trials,
                                double z = 1.959963984540054) {
    if (trials == 0) return {0.0, 1.0};
    if (hits > trials) throw std::invalid_argument("wilson: hits > trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = p + z2 / (2.0 * n);
    const double margin = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    // Endpoints are exact at the boundary counts; rounding would
    // otherwise leave lo a hair above 0 when hits = 0.
    double lo = hits == 0 ? 0.0 : std::max(0.0, (center - margin) / denom);
    double hi = hits == trials ? 1.0 : std::min(1.0, (center + margin) / denom);
    return {lo, hi};
}

struct TrialReport {
    std::uint64_t degree = 0;
    Strategy strategy = Strategy::altsym;
    std::uint64_t k = 0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double failure_rate = 1.0;
    Interval interval;
};

struct ProportionReport {
    std::uint64_t degree = 0;
    std::string predicate;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double estimate = 0;
    Interval interval;
};

inline CycleType sample_type(std::uint64_t n, ElementClass cls,
                             RandomSource& rng) {
    return cls == ElementClass::sym ? random_cycle_type(n, rng)
                                    : random_even_cycle_type(n, rng);
}

/// Runs `trials` independent executions of the strategy's type-fed core,
/// each on k freshly sampled cycle types; failure = verdict false.
/// Trial i draws from stream (stream_base + i), so results are
/// reproducible and independent of execution order.
inline TrialReport failure_rate(std::uint64_t n, Strategy strategy,
                                std::uint64_t k, std::uint64_t trials,
                                ElementClass cls, std::uint64_t seed,
                                std::uint64_t stream_base = 0) {
    if (n < 2) throw std::invalid_argument("failure_rate: degree must be >= 2");
    if (trials < 1) throw std::invalid_argument("failure_rate: trials must be >= 1");
    FactorCache cache;
    std::uint64_t failures = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        RandomSource rng(seed, stream_base + i);
        Verdict v = run_core_on_types(
            n, strategy, k, [&]() { return sample_type(n, cls, rng); }, cache);
        if (!v.giant_proven) ++failures;
    }
    TrialReport r;
    r.degree = n;
    r.strategy = strategy;
    r.k = k;
    r.trials = trials;
    r.failures = failures;
    r.failure_rate = static_cast<double>(failures) / static_cast<double>(trials);
    r.interval = wilson_interval(failures, trials);
    return r;
}

struct KEstimate {
    std::optional<std::uint64_t> k; // empty: not found up to the cap
    TrialReport report;             // report at the returned (or last) k
};

inline constexpr std::uint64_t kEstimateCap = 64;

/// Smallest k whose Wilson upper confidence bound on the failure rate is
/// below epsilon. Each k gets its own stream block.
inline KEstimate estimate_k(std::uint64_t n, double epsilon, Strategy strategy,
                            std::uint64_t trials, ElementClass cls,
                            std::uint64_t seed) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("estimate_k: epsilon must be in (0,1)");
    KEstimate est;
    for (std::uint64_t k = 1; k <= kEstimateCap; ++k) {
        est.report = failure_rate(n, strategy, k, trials, cls, seed,
                                  k * (trials + 1));
        if (est.report.interval.hi < epsilon) {
            est.k = k;
            return est;
        }
    }
    return est;
}

enum class Predicate {
    large_prime_order, // some cycle of prime length p, n/2 < p < n-2
    odd_cycle_gt_half, // some odd cycle length > n/2
    all_even_cycles,   // every cycle length even (requires n even)
    many_cycles        // more than 2 log n cycles
};

inline const char* predicate_name(Predicate p) {
    switch (p) {
        case Predicate::large_prime_order: return "large_prime_order";
        case Predicate::odd_cycle_gt_half: return "odd_cycle_gt_half";
        case Predicate::all_even_cycles: return "all_even_cycles";
        case Predicate::many_cycles: return "many_cycles";
    }
    return "?";
}

inline bool evaluate_predicate(Predicate p, const CycleType& t) {
    switch (p) {
        case Predicate::large_prime_order:
            return has_large_prime_cycle(t);
        case Predicate::odd_cycle_gt_half:
            for (const auto& part : t.parts())
                if (part.length % 2 == 1 && 2 * part.length > t.degree())
                    return true;
            return false;
        case Predicate::all_even_cycles:
            for (const auto& part : t.parts())
                if (part.length % 2 == 1) return false;
            return true;
        case Predicate::many_cycles:
            return static_cast<double>(num_cycles(t)) >
                   2.0 * std::log(static_cast<double>(t.degree()));
    }
    return false;
}

inline ProportionReport proportion(std::uint64_t n, Predicate predicate,
                                   std::uint64_t trials, std::uint64_t seed,
                                   ElementClass cls = ElementClass::sym) {
    if (predicate == Predicate::all_even_cycles && n % 2 != 0)
        throw std::invalid_argument("all_even_cycles requires an even degree");
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        RandomSource rng(seed, i);
        if (evaluate_predicate(predicate, sample_type(n, cls, rng))) ++hits;
    }
    ProportionReport r;
    r.degree = n;
    r.predicate = predicate_name(predicate);
    r.trials = trials;
    r.hits = hits;
    r.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    r.interval = wilson_interval(hits, trials);
    return r;
}

} // namespace altsym

#endif
