// Generator sets used across the test suites: giants, small non-giant
// primitive groups, and imprimitive groups with known block counts.
#ifndef ALTSYM_TESTS_GROUPS_HPP
#define ALTSYM_TESTS_GROUPS_HPP

#include <cstdint>
#include <numeric>
#include <queue>
#include <unordered_set>
#include <vector>

#include "altsym/perm.hpp"

namespace altsym::testgroups {

inline Permutation full_cycle(std::size_t n) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
    return Permutation::from_images(std::move(img));
}

inline Permutation transposition(std::size_t n, std::uint32_t a, std::uint32_t b) {
    auto x = Permutation::identity(n);
    auto img = x.images();
    std::swap(img[a], img[b]);
    return Permutation::from_images(std::move(img));
}

inline GeneratorSet symmetric(std::size_t n) {
    return GeneratorSet(n, {transposition(n, 0, 1), full_cycle(n)});
}

inline GeneratorSet alternating(std::size_t n) {
    // (1,2,3) together with an n-cycle (n odd) or (2,...,n) (n even).
    std::vector<std::uint32_t> three(n);
    std::iota(three.begin(), three.end(), std::uint32_t{0});
    three[0] = 1; three[1] = 2; three[2] = 0;
    std::vector<std::uint32_t> big(n);
    std::iota(big.begin(), big.end(), std::uint32_t{0});
    if (n % 2 == 1) {
        for (std::size_t i = 0; i < n; ++i) big[i] = static_cast<std::uint32_t>((i + 1) % n);
    } else {
        big[0] = 0;
        for (std::size_t i = 1; i < n; ++i)
            big[i] = static_cast<std::uint32_t>(i == n - 1 ? 1 : i + 1);
    }
    return GeneratorSet(n, {Permutation::from_images(std::move(three)),
                            Permutation::from_images(std::move(big))});
}

inline GeneratorSet cyclic(std::size_t n) {
    return GeneratorSet(n, {full_cycle(n)});
}

inline GeneratorSet dihedral(std::size_t n) {
    std::vector<std::uint32_t> refl(n);
    for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint32_t>((n - i) % n);
    return GeneratorSet(n, {full_cycle(n), Permutation::from_images(std::move(refl))});
}

/// S_b wr S_a acting imprimitively on a*b points, blocks {0..b-1},
/// {b..2b-1}, ...; the unique nontrivial block count is a when the top
/// group is primitive on blocks (a = 3, 4 here).
inline GeneratorSet wreath(std::size_t blocks, std::size_t block_size) {
    const std::size_t n = blocks * block_size;
    std::vector<Permutation> gens;
    // S_block_size on the first block.
    gens.push_back(transposition(n, 0, 1));
    if (block_size > 2) {
        std::vector<std::uint32_t> cyc(n);
        std::iota(cyc.begin(), cyc.end(), std::uint32_t{0});
        for (std::size_t i = 0; i < block_size; ++i)
            cyc[i] = static_cast<std::uint32_t>((i + 1) % block_size);
        gens.push_back(Permutation::from_images(std::move(cyc)));
    }
    // Swap of the first two blocks and a full cycle of blocks.
    std::vector<std::uint32_t> swap01(n), bcyc(n);
    std::iota(swap01.begin(), swap01.end(), std::uint32_t{0});
    for (std::size_t i = 0; i < block_size; ++i) {
        swap01[i] = static_cast<std::uint32_t>(i + block_size);
        swap01[i + block_size] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < block_size; ++i)
            bcyc[b * block_size + i] =
                static_cast<std::uint32_t>(((b + 1) % blocks) * block_size + i);
    gens.push_back(Permutation::from_images(std::move(swap01)));
    gens.push_back(Permutation::from_images(std::move(bcyc)));
    return GeneratorSet(n, gens);
}

// Mathieu group M_11 on 11 points, order 7920.
inline GeneratorSet mathieu11() {
    const std::size_t n = 11;
    return GeneratorSet(n, {parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", n),
                            parse_permutation("(3,7,11,8)(4,10,5,6)", n)});
}

// Mathieu group M_12 on 12 points, order 95040.
inline GeneratorSet mathieu12() {
    const std::size_t n = 12;
    return GeneratorSet(
        n, {parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", n),
            parse_permutation("(3,7,11,8)(4,10,5,6)", n),
            parse_permutation("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", n)});
}

// PGL(2,11) on the 12 points of the projective line: x -> x+1 and
// x -> 1/x. Points 1..11 are field elements 0..10, point 12 is infinity.
inline GeneratorSet pgl2_11() {
    const std::size_t n = 12;
    return GeneratorSet(n,
                        {parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", n),
                         parse_permutation("(1,12)(3,7)(4,5)(6,10)(8,9)", n)});
}

/// Breadth-first closure; only for groups small enough to enumerate.
inline std::vector<Permutation> enumerate_group(const GeneratorSet& g,
                                                std::size_t limit = 200000) {
    struct Hash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const {
            std::size_t h = 1469598103934665603ULL;
            for (std::uint32_t x : v) {
                h ^= x;
                h *= 1099511628211ULL;
            }
            return h;
        }
    };
    std::unordered_set<std::vector<std::uint32_t>, Hash> seen;
    std::vector<Permutation> out;
    std::queue<Permutation> queue;
    queue.push(Permutation::identity(g.degree));
    seen.insert(queue.front().images());
    while (!queue.empty()) {
        Permutation x = queue.front();
        queue.pop();
        out.push_back(x);
        for (const auto& gen : g.generators) {
            Permutation y = compose(x, gen);
            if (seen.insert(y.images()).second) {
                if (out.size() + queue.size() >= limit)
                    throw std::runtime_error("enumerate_group: limit exceeded");
                queue.push(y);
            }
        }
    }
    return out;
}

} // namespace altsym::testgroups

#endif
