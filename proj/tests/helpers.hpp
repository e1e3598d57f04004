#pragma once

#include <cstddef>
#include <random>
#include <string>

namespace testutil {

/// Alphabet sizes up to 26 use lowercase letters; larger ones use raw bytes.
inline std::string randomBytes(std::mt19937_64& rng, std::size_t n, unsigned alphabetSize) {
    std::string s(n, '\0');
    for (auto& c : s) {
        const auto v = static_cast<unsigned>(rng() % alphabetSize);
        c = alphabetSize <= 26 ? static_cast<char>('a' + v) : static_cast<char>(v);
    }
    return s;
}

/// Either a random slice of `text` (likely present) or fresh random bytes.
inline std::string randomPattern(std::mt19937_64& rng, const std::string& text, std::size_t m,
                                 unsigned alphabetSize) {
    if (!text.empty() && m <= text.size() && rng() % 2 == 0) {
        const std::size_t pos = rng() % (text.size() - m + 1);
        return text.substr(pos, m);
    }
    return randomBytes(rng, m, alphabetSize);
}

}  // namespace testutil
