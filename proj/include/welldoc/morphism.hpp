#pragma once

#include <string>
#include <vector>

#include "welldoc/word.hpp"

namespace welldoc {

/// A nonerasing morphism on {0,...,sigma-1}, given by its letter images.
class Morphism {
public:
    Morphism(std::size_t sigma, std::vector<Word> images);

    std::size_t sigma() const { return sigma_; }
    const Word& image(Letter a) const;
    const std::vector<Word>& images() const { return images_; }

    /// phi(u): concatenation of letter images.
    Word apply(const Word& u) const;

    /// Column j is the Parikh vector of image(j).
    std::vector<std::vector<long long>> incidence_matrix() const;

    /// True iff image(a) starts with a and has length >= 2.
    bool is_prolongable(Letter a) const;

    /// Composition: (*this)(other(u)).
    Morphism compose(const Morphism& other) const;

    bool operator==(const Morphism& other) const = default;

    /// Text form "sigma;0->w0;1->w1;...".
    std::string to_string() const;
    static Morphism parse(const std::string& text);

    /// JSON form {"sigma":n,"images":[...]}.
    std::string to_json() const;
    static Morphism from_json(const std::string& text);

private:
    std::size_t sigma_;
    std::vector<Word> images_;
};

}  // namespace welldoc
