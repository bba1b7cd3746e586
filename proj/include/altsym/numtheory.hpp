#ifndef ALTSYM_NUMTHEORY_HPP
#define ALTSYM_NUMTHEORY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace altsym {

inline constexpr std::uint64_t kFactorizeLimit = 1'000'000'000'000ULL; // 10^12

/// Prime-power decomposition of a positive integer, primes ascending.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Primes below 10^5, built once.
inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 100'000;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i)
                composite[static_cast<std::size_t>(j)] = true;
        }
        return out;
    }();
    return primes;
}

} // namespace detail

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set is deterministic for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod(x, x, m);
            if (x == m - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

// Brent's cycle-finding variant of Pollard rho. Input is composite,
// odd, and has no factor below 10^5.
inline std::uint64_t pollard_brent(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t saved = 0;
        int power = 1, lam = 1;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            if (power == lam) { x = y; power *= 2; lam = 0; }
            std::uint64_t q = 1;
            int batch = std::min(128, power - lam);
            saved = y;
            for (int i = 0; i < batch; ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            lam += batch;
            d = std::gcd(q, n);
        }
        if (d == n) {
            // Batch gcd overshot; replay one step at a time.
            y = saved;
            d = 1;
            while (d == 1) {
                y = f(y);
                d = std::gcd(x > y ? x - y : y - x, n);
            }
        }
        if (d != n) return d;
    }
}

inline void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    std::uint64_t d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace detail

inline Factorization factorize(std::uint64_t m) {
    if (m < 1 || m > kFactorizeLimit)
        throw std::out_of_range("factorize: value out of range [1, 10^12]");
    Factorization f;
    f.value = m;
    for (std::uint32_t p : detail::small_primes()) {
        if (std::uint64_t(p) * p > m) break;
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
    }
    if (m > 1) {
        if (is_prime(m)) {
            f.factors.emplace_back(m, 1);
        } else {
            std::vector<std::uint64_t> rest;
            detail::factor_rec(m, rest);
            std::sort(rest.begin(), rest.end());
            for (std::size_t i = 0; i < rest.size();) {
                std::size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                f.factors.emplace_back(rest[i], static_cast<unsigned>(j - i));
                i = j;
            }
        }
        // Keep primes ascending when rho output follows trial division.
        std::sort(f.factors.begin(), f.factors.end());
    }
    return f;
}

inline std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : f.factors) {
        std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t m) {
    return divisors(factorize(m));
}

/// Memoizing wrapper around factorize. One instance per test invocation
/// (or per thread); behaves exactly as repeated factorize calls.
class FactorCache {
public:
    const Factorization& factorize(std::uint64_t m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(m, altsym::factorize(m)).first->second;
    }

    const std::vector<std::uint64_t>& divisors(std::uint64_t m) {
        auto it = div_cache_.find(m);
        if (it != div_cache_.end()) return it->second;
        return div_cache_.emplace(m, altsym::divisors(factorize(m)))
            .first->second;
    }

private:
    std::unordered_map<std::uint64_t, Factorization> cache_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> div_cache_;
};

} // namespace altsym

#endif
