#include "welldoc/morphism.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace welldoc {

Morphism::Morphism(std::size_t sigma, std::vector<Word> images)
    : sigma_(sigma), images_(std::move(images)) {
    if (sigma < 1) throw std::invalid_argument("morphism needs alphabet size >= 1");
    if (images_.size() != sigma)
        throw std::invalid_argument("expected " + std::to_string(sigma) + " images, got " +
                                    std::to_string(images_.size()));
    Alphabet alpha(sigma);
    for (std::size_t a = 0; a < sigma; ++a) {
        if (images_[a].empty())
            throw std::invalid_argument("image of letter " + std::to_string(a) +
                                        " is empty (morphism must be nonerasing)");
        alpha.check(images_[a]);
    }
}

const Word& Morphism::image(Letter a) const {
    if (a >= sigma_) throw std::invalid_argument("letter out of range");
    return images_[a];
}

Word Morphism::apply(const Word& u) const {
    Word out;
    std::size_t total = 0;
    for (Letter a : u) total += image(a).size();
    out.reserve(total);
    for (Letter a : u) {
        const Word& im = images_[a];
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

std::vector<std::vector<long long>> Morphism::incidence_matrix() const {
    std::vector<std::vector<long long>> m(sigma_, std::vector<long long>(sigma_, 0));
    for (std::size_t j = 0; j < sigma_; ++j)
        for (Letter a : images_[j]) ++m[a][j];
    return m;
}

bool Morphism::is_prolongable(Letter a) const {
    const Word& im = image(a);
    return im.size() >= 2 && im[0] == a;
}

Morphism Morphism::compose(const Morphism& other) const {
    if (sigma_ != other.sigma_) throw std::invalid_argument("alphabet size mismatch in compose");
    std::vector<Word> images(sigma_);
    for (std::size_t a = 0; a < sigma_; ++a) images[a] = apply(other.images_[a]);
    return Morphism(sigma_, std::move(images));
}

std::string Morphism::to_string() const {
    std::ostringstream out;
    out << sigma_;
    for (std::size_t a = 0; a < sigma_; ++a)
        out << ';' << a << "->" << word_to_string(images_[a]);
    return out.str();
}

Morphism Morphism::parse(const std::string& text) {
    std::stringstream ss(text);
    std::string field;
    if (!std::getline(ss, field, ';'))
        throw std::invalid_argument("empty morphism spec");
    std::size_t sigma = 0;
    try {
        sigma = std::stoul(field);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad alphabet size '" + field + "'");
    }
    std::vector<Word> images(sigma);
    std::vector<bool> seen(sigma, false);
    while (std::getline(ss, field, ';')) {
        auto arrow = field.find("->");
        if (arrow == std::string::npos)
            throw std::invalid_argument("mapping '" + field + "' lacks '->'");
        std::string lhs = field.substr(0, arrow);
        unsigned long a = 0;
        try {
            a = std::stoul(lhs);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad letter '" + lhs + "' in morphism spec");
        }
        if (a >= sigma) throw std::invalid_argument("letter " + lhs + " out of range");
        if (seen[a]) throw std::invalid_argument("duplicate mapping for letter " + lhs);
        seen[a] = true;
        images[a] = word_from_string(field.substr(arrow + 2));
    }
    for (std::size_t a = 0; a < sigma; ++a)
        if (!seen[a])
            throw std::invalid_argument("missing image for letter " + std::to_string(a));
    return Morphism(sigma, std::move(images));
}

std::string Morphism::to_json() const {
    nlohmann::json j;
    j["sigma"] = sigma_;
    auto& arr = j["images"] = nlohmann::json::array();
    for (const Word& im : images_) arr.push_back(word_to_string(im));
    return j.dump();
}

Morphism Morphism::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::size_t sigma = j.at("sigma").get<std::size_t>();
    std::vector<Word> images;
    for (const auto& s : j.at("images")) images.push_back(word_from_string(s.get<std::string>()));
    return Morphism(sigma, std::move(images));
}

}  // namespace welldoc
