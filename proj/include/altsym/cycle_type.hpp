#ifndef ALTSYM_CYCLE_TYPE_HPP
#define ALTSYM_CYCLE_TYPE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "altsym/numtheory.hpp"
#include "altsym/perm.hpp"

namespace altsym {

/// Multiset of cycle lengths, fixed points included as length-1 cycles.
/// Parts are kept with lengths strictly decreasing.
class CycleType {
public:
    struct Part {
        std::uint64_t length;
        std::uint64_t multiplicity;
        bool operator==(const Part&) const = default;
    };

    CycleType() = default;

    /// Parts may arrive in any order; equal lengths are merged.
    CycleType(std::uint64_t degree, std::vector<Part> parts)
        : degree_(degree) {
        std::sort(parts.begin(), parts.end(),
                  [](const Part& a, const Part& b) { return a.length > b.length; });
        std::uint64_t sum = 0;
        for (const Part& p : parts) {
            if (p.length == 0 || p.multiplicity == 0)
                throw std::invalid_argument("cycle type: zero length or multiplicity");
            if (!parts_.empty() && parts_.back().length == p.length)
                parts_.back().multiplicity += p.multiplicity;
            else
                parts_.push_back(p);
            sum += p.length * p.multiplicity;
        }
        if (sum != degree)
            throw std::invalid_argument("cycle type: parts do not sum to degree");
    }

    std::uint64_t degree() const { return degree_; }
    const std::vector<Part>& parts() const { return parts_; }
    bool operator==(const CycleType&) const = default;

    std::uint64_t multiplicity_of(std::uint64_t length) const {
        for (const Part& p : parts_)
            if (p.length == length) return p.multiplicity;
        return 0;
    }

private:
    std::uint64_t degree_ = 0;
    std::vector<Part> parts_;
};

inline CycleType cycle_structure(const Permutation& x) {
    std::map<std::uint64_t, std::uint64_t> counts;
    std::vector<bool> seen(x.degree(), false);
    for (std::uint32_t i = 0; i < x.degree(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::uint32_t j = i; !seen[j]; j = x(j)) {
            seen[j] = true;
            ++len;
        }
        ++counts[len];
    }
    std::vector<CycleType::Part> parts;
    for (auto [len, mult] : counts) parts.push_back({len, mult});
    return CycleType(x.degree(), std::move(parts));
}

inline std::uint64_t num_cycles(const CycleType& t) {
    std::uint64_t n = 0;
    for (const auto& p : t.parts()) n += p.multiplicity;
    return n;
}

inline Parity sign_of_type(const CycleType& t) {
    return (t.degree() - num_cycles(t)) % 2 == 0 ? Parity::even : Parity::odd;
}

/// Element order in factored form: prime -> max p-adic valuation over the
/// cycle lengths. The order itself is never materialized (it can exceed
/// any fixed-width integer at large degree).
inline std::map<std::uint64_t, unsigned> order_valuations(const CycleType& t,
                                                          FactorCache& cache) {
    std::map<std::uint64_t, unsigned> val;
    for (const auto& part : t.parts()) {
        for (const auto& [p, e] : cache.factorize(part.length).factors) {
            auto [it, inserted] = val.emplace(p, e);
            if (!inserted && it->second < e) it->second = e;
        }
    }
    return val;
}

/// Cycle type of y = x^(ord(x)/p): m p-cycles and k fixed points.
struct PrimePowerShape {
    std::uint64_t p;
    std::uint64_t m;
    std::uint64_t k;
    bool operator==(const PrimePowerShape&) const = default;
};

inline PrimePowerShape prime_power_shape(const CycleType& t, std::uint64_t p) {
    unsigned max_val = 0;
    for (const auto& part : t.parts()) {
        std::uint64_t len = part.length;
        unsigned v = 0;
        while (len % p == 0) { len /= p; ++v; }
        max_val = std::max(max_val, v);
    }
    if (max_val == 0)
        throw std::invalid_argument("prime_power_shape: p does not divide the order");
    // Cycles whose length has p-valuation max_val split into length/p
    // p-cycles under x^(ord/p); all other cycles collapse to fixed points.
    std::uint64_t m = 0;
    for (const auto& part : t.parts()) {
        std::uint64_t len = part.length;
        unsigned v = 0;
        while (len % p == 0) { len /= p; ++v; }
        if (v == max_val) m += (part.length / p) * part.multiplicity;
    }
    return {p, m, t.degree() - m * p};
}

/// Largest length l such that a power of any element of this type is a
/// single l-cycle plus fixed points, with 1 < l < n-2. Requires l to have
/// multiplicity 1 and be coprime to every other length: a length-l cycle
/// under x^e splits into gcd(l,e) cycles, so a lone nontrivial cycle
/// forces gcd(l,e) = 1 with e a multiple of all other lengths.
inline std::optional<std::uint64_t> single_cycle_power(const CycleType& t) {
    const std::uint64_t n = t.degree();
    for (const auto& part : t.parts()) {
        const std::uint64_t l = part.length;
        if (part.multiplicity != 1) continue;
        if (l <= 1 || n < 3 || l >= n - 2) continue;
        bool coprime = true;
        for (const auto& other : t.parts()) {
            if (other.length == l) continue;
            if (std::gcd(l, other.length) != 1) { coprime = false; break; }
        }
        if (coprime) return l; // parts are length-descending: first hit is largest
    }
    return std::nullopt;
}

/// True iff some cycle length is a prime p with n/2 < p < n-2. Since
/// p > n/2 there is room for at most one such cycle, and order divisible
/// by p is equivalent to having a cycle of length exactly p.
inline bool has_large_prime_cycle(const CycleType& t) {
    const std::uint64_t n = t.degree();
    for (const auto& part : t.parts()) {
        const std::uint64_t l = part.length;
        if (2 * l > n && n >= 3 && l < n - 2 && is_prime(l)) return true;
    }
    return false;
}

// Text format: "n=<degree>; <len>^<mult>,<len>^<mult>,..." lengths descending.
inline std::string format_cycle_type(const CycleType& t) {
    std::string out = "n=" + std::to_string(t.degree()) + ";";
    bool first = true;
    for (const auto& p : t.parts()) {
        out += first ? " " : ",";
        first = false;
        out += std::to_string(p.length) + "^" + std::to_string(p.multiplicity);
    }
    return out;
}

inline CycleType parse_cycle_type(std::string_view text) {
    auto fail = [] { throw std::invalid_argument("malformed cycle type"); };
    auto parse_u64 = [&](std::size_t& i) -> std::uint64_t {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail();
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        return v;
    };
    auto skip_ws = [&](std::size_t& i) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    std::size_t i = 0;
    skip_ws(i);
    if (text.substr(i, 2) != "n=") fail();
    i += 2;
    std::uint64_t degree = parse_u64(i);
    skip_ws(i);
    if (i >= text.size() || text[i] != ';') fail();
    ++i;
    std::vector<CycleType::Part> parts;
    skip_ws(i);
    while (i < text.size()) {
        std::uint64_t len = parse_u64(i);
        if (i >= text.size() || text[i] != '^') fail();
        ++i;
        std::uint64_t mult = parse_u64(i);
        parts.push_back({len, mult});
        skip_ws(i);
        if (i < text.size()) {
            if (text[i] != ',') fail();
            ++i;
            skip_ws(i);
        }
    }
    return CycleType(degree, std::move(parts));
}

} // namespace altsym

#endif
