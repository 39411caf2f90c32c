#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace welldoc {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using Parikh = std::vector<long long>;

/// Alphabet {0, ..., size-1}.
struct Alphabet {
    std::size_t size = 0;

    explicit Alphabet(std::size_t sigma) : size(sigma) {
        if (sigma < 1) throw std::invalid_argument("alphabet size must be >= 1");
    }

    bool contains(Letter a) const { return a < size; }

    void check(const Word& u) const {
        for (Letter a : u)
            if (!contains(a))
                throw std::invalid_argument("letter " + std::to_string(a) +
                                            " out of range for alphabet of size " +
                                            std::to_string(size));
    }
};

/// Letter-occurrence counts of u over an alphabet of size sigma.
inline Parikh parikh(const Word& u, std::size_t sigma) {
    Parikh counts(sigma, 0);
    for (Letter a : u) {
        if (a >= sigma) throw std::invalid_argument("letter out of range in parikh");
        ++counts[a];
    }
    return counts;
}

/// "0210" for small alphabets; "0,2,1,0" once a letter needs more than one digit.
std::string word_to_string(const Word& u);

/// Inverse of word_to_string; accepts both digit-string and comma-separated forms.
Word word_from_string(const std::string& s);

}  // namespace welldoc
