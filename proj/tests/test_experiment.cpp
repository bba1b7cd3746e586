#include <doctest.h>

#include <cmath>

#include "altsym/experiment.hpp"
#include "altsym/ktable.hpp"

using namespace altsym;

TEST_CASE("wilson interval") {
    auto iv = wilson_interval(0, 100);
    CHECK(iv.lo == 0.0);
    CHECK(iv.hi > 0.0);
    CHECK(iv.hi < 0.05);
    iv = wilson_interval(50, 100);
    CHECK(iv.contains(0.5));
    CHECK(iv.hi - iv.lo < 0.2);
    iv = wilson_interval(100, 100);
    CHECK(iv.hi == 1.0);
}

TEST_CASE("failure_rate basics") {
    auto r = failure_rate(1000, Strategy::altsym, 0, 50, ElementClass::sym, 1);
    CHECK(r.failure_rate == 1.0); // k = 0 never proves anything
    CHECK(r.failures == r.trials);

    r = failure_rate(1000, Strategy::altsym, 4, 500, ElementClass::sym, 1);
    CHECK(r.failures <= r.trials);
    CHECK(r.interval.contains(r.failure_rate));
}

TEST_CASE("failure_rate is non-increasing in k") {
    double prev = 1.1;
    for (std::uint64_t k = 1; k <= 6; ++k) {
        auto r = failure_rate(1000, Strategy::altsym, k, 2000,
                              ElementClass::sym, 77, k * 100000);
        // Allow tiny statistical jitter between adjacent k.
        CHECK(r.failure_rate <= prev + 0.02);
        prev = r.failure_rate;
    }
    CHECK(prev < 0.1);
}

TEST_CASE("failure at prime degree reduces to the jordan test") {
    // At prime degree the block filter starts empty, so a single-type
    // trial fails exactly when jordan_test fails.
    const std::uint64_t n = 1009;
    const std::uint64_t trials = 2000;
    auto r = failure_rate(n, Strategy::altsym, 1, trials, ElementClass::sym, 5);
    FactorCache cache;
    std::uint64_t expect = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        RandomSource rng(5, i);
        CycleType t = sample_type(n, ElementClass::sym, rng);
        bool kept = static_cast<double>(num_cycles(t)) <
                    2.0 * std::log(static_cast<double>(n));
        if (!(kept && jordan_test(t, cache))) ++expect;
    }
    CHECK(r.failures == expect);
}

TEST_CASE("estimate_k at easy points") {
    auto est = estimate_k(1'000'000, 0.1, Strategy::altsym, 2000,
                          ElementClass::sym, 3);
    REQUIRE(est.k);
    CHECK(*est.k == 1);

    est = estimate_k(10, 0.1, Strategy::altsym, 2000, ElementClass::sym, 3);
    REQUIRE(est.k);
    CHECK(*est.k >= 5);
    CHECK(*est.k <= 7);

    CHECK_THROWS_AS(
        estimate_k(10, 1.5, Strategy::altsym, 10, ElementClass::sym, 1),
        std::invalid_argument);
}

TEST_CASE("alt class samples even types only") {
    auto r = failure_rate(100, Strategy::altsym, 3, 200, ElementClass::alt, 9);
    CHECK(r.trials == 200); // structural smoke: runs to completion
    RandomSource rng(10);
    for (int i = 0; i < 200; ++i)
        CHECK(sign_of_type(sample_type(64, ElementClass::alt, rng)) ==
              Parity::even);
}

TEST_CASE("proportion point estimates") {
    auto r = proportion(1'000'000, Predicate::odd_cycle_gt_half, 20000, 21);
    CHECK(std::abs(r.estimate - 0.5 * std::log(2.0)) < 0.02);

    r = proportion(10'000, Predicate::all_even_cycles, 100000, 22);
    CHECK(std::abs(r.estimate - std::sqrt(2.0 / (3.14159265358979 * 10000))) <
          0.002);

    r = proportion(1'000'000, Predicate::many_cycles, 20000, 23);
    CHECK(r.estimate < 0.02);

    CHECK_THROWS_AS(
        proportion(101, Predicate::all_even_cycles, 10, 1),
        std::invalid_argument);
}

TEST_CASE("tabulated k lookup and doubling heuristic") {
    using altsym::ktable::k_for;
    CHECK(k_for(1'000'000, 0.1) == 1);
    CHECK(k_for(10, 0.1) == 6);
    CHECK(k_for(10, 0.01) == 9);
    CHECK(k_for(1000, 0.02) == 3);
    CHECK(k_for(15, 0.1) == 6);      // rounds down to the N=10 row
    CHECK(k_for(2, 0.1) == 6);       // below the table: first row
    CHECK(k_for(1'000'000, 0.03) == 2); // 0.03 maps to the 0.02 column
    CHECK(k_for(1'000'000, 0.0001) == 4); // one doubling past 0.01
    CHECK_THROWS_AS(k_for(100, 1.5), std::invalid_argument);
}
