#include "welldoc/prefix_stream.hpp"

#include <stdexcept>

namespace welldoc {

PrefixStream::PrefixStream(Morphism phi, Letter start)
    : phi_(std::move(phi)), start_(start) {
    if (!phi_.is_prolongable(start_))
        throw std::domain_error("morphism is not prolongable on letter " +
                                std::to_string(start_));
    // Seed with phi(start) = start . s; position 0 counts as expanded.
    buf_ = phi_.image(start_);
    expanded_ = 1;
}

void PrefixStream::extend_to(std::size_t n) {
    // Appending phi(buf_[expanded_..]) keeps buf_ a prefix of the fixed
    // point: w = start . s . phi(s) . phi^2(s) ...
    while (buf_.size() < n) {
        if (expanded_ >= buf_.size())
            throw std::logic_error("prefix stream exhausted (degenerate morphism)");
        const Word& im = phi_.image(buf_[expanded_]);
        buf_.insert(buf_.end(), im.begin(), im.end());
        ++expanded_;
    }
}

Letter PrefixStream::at(std::size_t i) {
    extend_to(i + 1);
    return buf_[i];
}

const Word& PrefixStream::prefix(std::size_t n) {
    extend_to(n);
    return buf_;
}

Word fixed_point_prefix(const Morphism& phi, Letter start, std::size_t n) {
    if (n == 0) {
        if (!phi.is_prolongable(start))
            throw std::domain_error("morphism is not prolongable on letter " +
                                    std::to_string(start));
        return {};
    }
    PrefixStream w(phi, start);
    w.extend_to(n);
    return Word(w.buffer().begin(), w.buffer().begin() + n);
}

std::set<Word> factors(PrefixStream& w, std::size_t len, std::size_t horizon) {
    if (horizon < len) throw std::invalid_argument("horizon must be >= factor length");
    std::set<Word> out;
    if (len == 0) {
        out.insert(Word{});
        return out;
    }
    const Word& p = w.prefix(horizon);
    for (std::size_t i = 0; i + len <= horizon; ++i)
        out.insert(Word(p.begin() + i, p.begin() + i + len));
    return out;
}

std::vector<std::vector<bool>> rauzy_graph1(PrefixStream& w, std::size_t horizon) {
    if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
    std::size_t sigma = w.sigma();
    std::vector<std::vector<bool>> adj(sigma, std::vector<bool>(sigma, false));
    const Word& p = w.prefix(horizon);
    for (std::size_t i = 0; i + 1 < horizon; ++i) adj[p[i]][p[i + 1]] = true;
    return adj;
}

}  // namespace welldoc
