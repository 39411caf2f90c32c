#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "welldoc/prefix_stream.hpp"

namespace welldoc {

/// Z_{n+1} = a Z_n + c mod m.
struct LcgParams {
    std::uint64_t a = 0;
    std::uint64_t c = 0;
    std::uint64_t m = 2;
    std::uint64_t seed = 0;

    void validate() const;
    static LcgParams parse(const std::string& quad);  // "a,c,m,seed"
};

std::uint64_t lcg_next(std::uint64_t state, const LcgParams& params);

/// Interleaves one LCG per letter along a morphic word: step n emits the
/// current state of the generator for letter w_n and advances only that
/// generator. All generators share the modulus of params[0].
class CombinedStream {
public:
    CombinedStream(PrefixStream word, std::vector<LcgParams> params);

    std::uint64_t next();
    std::size_t position() const { return pos_; }
    std::uint64_t modulus() const { return params_[0].m; }

    /// Letter-occurrence counters so far (the function f, per letter).
    const std::vector<std::uint64_t>& counters() const { return counters_; }

private:
    PrefixStream word_;
    std::vector<LcgParams> params_;
    std::vector<std::uint64_t> states_;
    std::vector<std::uint64_t> counters_;
    std::size_t pos_ = 0;
};

struct CoverageResult {
    double fraction = 0.0;
    unsigned long long distinct = 0;
    unsigned long long missing = 0;
};

/// Fraction of (Z/mZ)^d reached by overlapping output d-tuples within
/// the first `samples` outputs.
CoverageResult tuple_coverage(CombinedStream& stream, std::size_t d, std::size_t samples);

}  // namespace welldoc
