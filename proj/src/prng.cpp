#include "welldoc/prng.hpp"

#include <stdexcept>
#include <unordered_set>

namespace welldoc {

void LcgParams::validate() const {
    if (m < 2) throw std::invalid_argument("LCG modulus must be >= 2");
    if (a >= m || c >= m || seed >= m)
        throw std::invalid_argument("LCG parameters must satisfy a, c, seed < m");
}

LcgParams LcgParams::parse(const std::string& quad) {
    LcgParams p;
    std::uint64_t* fields[4] = {&p.a, &p.c, &p.m, &p.seed};
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t end = quad.find(',', start);
        if ((i < 3) != (end != std::string::npos))
            throw std::invalid_argument("expected 'a,c,m,seed', got '" + quad + "'");
        std::string field = quad.substr(start, end == std::string::npos ? end : end - start);
        try {
            *fields[i] = std::stoull(field);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad LCG parameter '" + field + "'");
        }
        start = end + 1;
    }
    p.validate();
    return p;
}

std::uint64_t lcg_next(std::uint64_t state, const LcgParams& params) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((u128(params.a) * state + params.c) % params.m);
}

CombinedStream::CombinedStream(PrefixStream word, std::vector<LcgParams> params)
    : word_(std::move(word)), params_(std::move(params)) {
    if (params_.size() != word_.sigma())
        throw std::invalid_argument("need exactly one LCG parameter set per letter");
    for (const LcgParams& p : params_) {
        p.validate();
        if (p.m != params_[0].m)
            throw std::invalid_argument("all per-letter LCGs must share one modulus");
    }
    states_.reserve(params_.size());
    for (const LcgParams& p : params_) states_.push_back(p.seed);
    counters_.assign(params_.size(), 0);
}

std::uint64_t CombinedStream::next() {
    Letter l = word_.at(pos_);
    // The counter for l equals f(pos_), so the stored state is exactly
    // the f(pos_)-th value of generator l.
    std::uint64_t out = states_[l];
    states_[l] = lcg_next(states_[l], params_[l]);
    ++counters_[l];
    ++pos_;
    return out;
}

CoverageResult tuple_coverage(CombinedStream& stream, std::size_t d, std::size_t samples) {
    if (d < 1) throw std::invalid_argument("tuple dimension must be >= 1");
    if (samples < d) throw std::invalid_argument("need at least d samples");
    const std::uint64_t m = stream.modulus();

    unsigned long long space = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (space > (1ull << 62) / m)
            throw std::invalid_argument("m^d too large for coverage counting");
        space *= m;
    }

    std::vector<std::uint64_t> window(d);
    std::unordered_set<unsigned long long> seen;
    for (std::size_t n = 0; n < samples; ++n) {
        for (std::size_t i = 0; i + 1 < d; ++i) window[i] = window[i + 1];
        window[d - 1] = stream.next();
        if (n + 1 < d) continue;
        unsigned long long code = 0;
        for (std::uint64_t x : window) code = code * m + x;
        seen.insert(code);
    }

    CoverageResult r;
    r.distinct = seen.size();
    r.missing = space - r.distinct;
    r.fraction = static_cast<double>(r.distinct) / static_cast<double>(space);
    return r;
}

}  // namespace welldoc
