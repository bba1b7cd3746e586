#ifndef ALTSYM_GROUP_FILE_HPP
#define ALTSYM_GROUP_FILE_HPP

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "altsym/perm.hpp"

namespace altsym {

// Generator file format:
//   line 1: "degree <n>"
//   each later non-empty, non-# line: one generator, 1-based cycle
//   notation "(1,2)(3,4)" or image list "[2,1,4,3]".
inline GeneratorSet parse_generator_file(std::istream& in) {
    std::string line;
    std::size_t degree = 0;
    bool have_degree = false;
    std::vector<Permutation> gens;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(start, end - start + 1);
        if (trimmed[0] == '#') continue;
        if (!have_degree) {
            std::istringstream ss(trimmed);
            std::string word;
            long long n = -1;
            if (!(ss >> word >> n) || word != "degree" || n < 1)
                throw std::invalid_argument(
                    "line " + std::to_string(lineno) +
                    ": expected 'degree <n>' header");
            degree = static_cast<std::size_t>(n);
            have_degree = true;
            continue;
        }
        try {
            gens.push_back(parse_permutation(trimmed, degree));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                        e.what());
        }
    }
    if (!have_degree)
        throw std::invalid_argument("missing 'degree <n>' header");
    if (gens.empty())
        throw std::invalid_argument("no generators in file");
    return GeneratorSet(degree, std::move(gens));
}

inline GeneratorSet parse_generator_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_generator_file(ss);
}

} // namespace altsym

#endif
