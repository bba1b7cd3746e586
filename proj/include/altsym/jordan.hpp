#ifndef ALTSYM_JORDAN_HPP
#define ALTSYM_JORDAN_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altsym/cycle_type.hpp"
#include "altsym/numtheory.hpp"

namespace altsym {

// Certificate tags name the result used: a single-cycle criterion (J14)
// or one of three "m p-cycles plus k fixed points" criteria.
enum class JordanRule { J14, JMWS, M18, P79 };

struct JordanCertificate {
    JordanRule rule;
    // J14: ell is set. Others: (p, m, k) are set.
    std::uint64_t ell = 0;
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t k = 0;

    std::string describe() const {
        switch (rule) {
            case JordanRule::J14: return "J14 l=" + std::to_string(ell);
            case JordanRule::JMWS:
                return "JMWS p=" + std::to_string(p) + " m=" + std::to_string(m) +
                       " k=" + std::to_string(k);
            case JordanRule::M18:
                return "M18 p=" + std::to_string(p) + " m=" + std::to_string(m) +
                       " k=" + std::to_string(k);
            case JordanRule::P79:
                return "P79 p=" + std::to_string(p) + " m=" + std::to_string(m) +
                       " k=" + std::to_string(k);
        }
        return {};
    }
};

/// An ell-cycle with 1 < ell < n-2 certifies.
inline bool check_j14(std::uint64_t ell, std::uint64_t n) {
    return ell > 1 && n >= 3 && ell < n - 2;
}

/// Small-m table: m p-cycles, k fixed points, m < p required.
inline bool check_jmws(std::uint64_t m, std::uint64_t p, std::uint64_t k) {
    if (m >= p) return false;
    switch (m) {
        case 2: return k > 3 || (p > 3 && k > 2);
        case 3: return k > 3;
        case 4: return k > 5 || (p > 5 && k > 4);
        case 5: return k > 2;
        case 6: return k > 7 || (p > 7 && k > 6);
        case 7: return k > 8;
        default: return false;
    }
}

inline bool check_m18(std::uint64_t m, std::uint64_t p, std::uint64_t k) {
    return m > 5 && p > 2 * m - 2 && k > 4 * m - 4;
}

inline bool check_p79(std::uint64_t m, std::uint64_t p, std::uint64_t k,
                      std::uint64_t n) {
    if (p == 2 || m <= 1 || m >= p) return false;
    if (2 * k <= 5 * m - 4) return false; // k > 5m/2 - 2 in integers
    if (n == 9) return false;
    // Excluded degree n = C(c,2), c = m + (p+1)/2; p can be near 10^12.
    unsigned __int128 c = m + (p + 1) / 2;
    if (static_cast<unsigned __int128>(n) * 2 == c * (c - 1)) return false;
    return true;
}

/// Decides from the cycle type alone whether some power is a certified
/// Jordan element. Sound unconditionally: any returned witness satisfies
/// its rule's predicate. Returning nothing draws no conclusion.
inline std::optional<JordanCertificate> jordan_test(const CycleType& t,
                                                    FactorCache& cache) {
    const std::uint64_t n = t.degree();
    if (auto ell = single_cycle_power(t)) {
        assert(check_j14(*ell, n));
        return JordanCertificate{JordanRule::J14, *ell};
    }
    auto valuations = order_valuations(t, cache);
    // Larger p gives smaller m and is more likely to certify.
    for (auto it = valuations.rbegin(); it != valuations.rend(); ++it) {
        const std::uint64_t p = it->first;
        PrimePowerShape shape = prime_power_shape(t, p);
        if (shape.m == 1) {
            if (check_j14(p, n))
                return JordanCertificate{JordanRule::J14, p};
            continue;
        }
        if (shape.m >= p) continue; // common hypothesis of all three results
        if (check_jmws(shape.m, p, shape.k))
            return JordanCertificate{JordanRule::JMWS, 0, p, shape.m, shape.k};
        if (check_m18(shape.m, p, shape.k))
            return JordanCertificate{JordanRule::M18, 0, p, shape.m, shape.k};
        if (check_p79(shape.m, p, shape.k, n))
            return JordanCertificate{JordanRule::P79, 0, p, shape.m, shape.k};
    }
    return std::nullopt;
}

} // namespace altsym

#endif
