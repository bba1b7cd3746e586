#ifndef ALTSYM_PERM_HPP
#define ALTSYM_PERM_HPP

#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace altsym {

/// A permutation of {0,...,n-1} stored as an image table.
/// Points are 0-based internally; all text I/O is 1-based.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t n) {
        Permutation x;
        x.images_.resize(n);
        std::iota(x.images_.begin(), x.images_.end(), std::uint32_t{0});
        return x;
    }

    /// Takes ownership of a 0-based image table; validates bijectivity.
    static Permutation from_images(std::vector<std::uint32_t> images) {
        std::vector<bool> seen(images.size(), false);
        for (std::uint32_t v : images) {
            if (v >= images.size() || seen[v])
                throw std::invalid_argument("image table is not a bijection");
            seen[v] = true;
        }
        Permutation x;
        x.images_ = std::move(images);
        return x;
    }

    std::size_t degree() const { return images_.size(); }
    std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;

    bool is_identity() const {
        for (std::uint32_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

private:
    std::vector<std::uint32_t> images_;
};

/// Left-to-right composition: (a*b)(i) = b(a(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<std::uint32_t> img(a.degree());
    for (std::uint32_t i = 0; i < a.degree(); ++i)
        img[i] = b(a(i));
    return Permutation::from_images(std::move(img));
}

inline Permutation inverse(const Permutation& x) {
    std::vector<std::uint32_t> img(x.degree());
    for (std::uint32_t i = 0; i < x.degree(); ++i)
        img[x(i)] = i;
    return Permutation::from_images(std::move(img));
}

inline Permutation power(const Permutation& x, std::uint64_t e) {
    Permutation acc = Permutation::identity(x.degree());
    Permutation base = x;
    while (e) {
        if (e & 1) acc = compose(acc, base);
        if (e >>= 1) base = compose(base, base);
    }
    return acc;
}

enum class Parity { even, odd };

inline Parity sign(const Permutation& x) {
    std::size_t cycles = 0;
    std::vector<bool> seen(x.degree(), false);
    for (std::uint32_t i = 0; i < x.degree(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::uint32_t j = i; !seen[j]; j = x(j)) seen[j] = true;
    }
    return (x.degree() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

struct GeneratorSet {
    std::size_t degree = 0;
    std::vector<Permutation> generators;

    GeneratorSet() = default;
    GeneratorSet(std::size_t n, std::vector<Permutation> gens)
        : degree(n), generators(std::move(gens)) {
        if (generators.empty())
            throw std::invalid_argument("generator set must be non-empty");
        for (const auto& g : generators)
            if (g.degree() != degree)
                throw std::invalid_argument("generator degree mismatch");
    }
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    }
    std::uint32_t find(std::uint32_t i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        parent_[find(a)] = find(b);
    }

private:
    std::vector<std::uint32_t> parent_;
};

} // namespace detail

inline bool is_transitive(const GeneratorSet& g) {
    if (g.degree == 0) return false;
    detail::UnionFind uf(g.degree);
    for (const auto& gen : g.generators)
        for (std::uint32_t i = 0; i < g.degree; ++i)
            uf.unite(i, gen(i));
    std::uint32_t root = uf.find(0);
    for (std::uint32_t i = 1; i < g.degree; ++i)
        if (uf.find(i) != root) return false;
    return true;
}

// Text formats (1-based): cycle notation "(1,2,3)(4,5)" or image list
// "[2,3,1]". The identity formats as "()".
inline Permutation parse_permutation(std::string_view text, std::size_t n) {
    auto skip_ws = [&](std::size_t& i) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&](std::size_t& i) -> std::uint64_t {
        skip_ws(i);
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("expected a point number");
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > n + 1) throw std::invalid_argument("point out of range");
            ++i;
        }
        return v;
    };
    auto to_point = [&](std::uint64_t v) -> std::uint32_t {
        if (v < 1 || v > n) throw std::invalid_argument("point out of range");
        return static_cast<std::uint32_t>(v - 1);
    };

    std::size_t i = 0;
    skip_ws(i);
    if (i >= text.size())
        throw std::invalid_argument("empty permutation text");

    if (text[i] == '[') {
        ++i;
        std::vector<std::uint32_t> img;
        skip_ws(i);
        if (i < text.size() && text[i] == ']') {
            ++i;
        } else {
            for (;;) {
                img.push_back(to_point(parse_int(i)));
                skip_ws(i);
                if (i >= text.size())
                    throw std::invalid_argument("unterminated image list");
                if (text[i] == ']') { ++i; break; }
                if (text[i] != ',')
                    throw std::invalid_argument("expected ',' or ']'");
                ++i;
            }
        }
        skip_ws(i);
        if (i != text.size())
            throw std::invalid_argument("trailing characters");
        if (img.size() != n)
            throw std::invalid_argument("image list length differs from degree");
        return Permutation::from_images(std::move(img));
    }

    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), std::uint32_t{0});
    std::vector<bool> used(n, false);
    while (i < text.size()) {
        skip_ws(i);
        if (i >= text.size()) break;
        if (text[i] != '(')
            throw std::invalid_argument("expected '('");
        ++i;
        skip_ws(i);
        std::vector<std::uint32_t> cycle;
        if (i < text.size() && text[i] == ')') {
            ++i; // "()" is the identity cycle
        } else {
            for (;;) {
                std::uint32_t pt = to_point(parse_int(i));
                if (used[pt]) throw std::invalid_argument("repeated point");
                used[pt] = true;
                cycle.push_back(pt);
                skip_ws(i);
                if (i >= text.size())
                    throw std::invalid_argument("unterminated cycle");
                if (text[i] == ')') { ++i; break; }
                if (text[i] != ',')
                    throw std::invalid_argument("expected ',' or ')'");
                ++i;
            }
        }
        for (std::size_t j = 0; j + 1 < cycle.size(); ++j)
            img[cycle[j]] = cycle[j + 1];
        if (cycle.size() > 1)
            img[cycle.back()] = cycle.front();
        skip_ws(i);
    }
    return Permutation::from_images(std::move(img));
}

inline std::string format_permutation(const Permutation& x) {
    std::string out;
    std::vector<bool> seen(x.degree(), false);
    for (std::uint32_t i = 0; i < x.degree(); ++i) {
        if (seen[i] || x(i) == i) { seen[i] = true; continue; }
        out += '(';
        for (std::uint32_t j = i; !seen[j]; j = x(j)) {
            seen[j] = true;
            if (j != i) out += ',';
            out += std::to_string(j + 1);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

} // namespace altsym

#endif
