#pragma once

#include <set>
#include <vector>

#include "welldoc/morphism.hpp"

namespace welldoc {

/// Lazily buffered prefix of the fixed point lim phi^n(start).
///
/// Uses the identity w = start . s . phi(s) . phi^2(s) ... where
/// phi(start) = start . s, so each expansion step applies phi to the
/// not-yet-expanded tail only. The buffer never shrinks and positions,
/// once buffered, never change.
class PrefixStream {
public:
    PrefixStream(Morphism phi, Letter start);

    const Morphism& morphism() const { return phi_; }
    Letter start() const { return start_; }
    std::size_t sigma() const { return phi_.sigma(); }

    /// Ensures at least n symbols are buffered.
    void extend_to(std::size_t n);

    Letter at(std::size_t i);

    /// View of the first n symbols (extends the buffer as needed).
    const Word& prefix(std::size_t n);

    /// Buffered symbols so far (no extension).
    const Word& buffer() const { return buf_; }

private:
    Morphism phi_;
    Letter start_;
    Word buf_;
    std::size_t expanded_ = 0;  // positions whose images are already in buf_
};

/// First n symbols of the fixed point of phi at `start`.
Word fixed_point_prefix(const Morphism& phi, Letter start, std::size_t n);

/// Distinct factors of length `len` occurring in w[0, horizon).
std::set<Word> factors(PrefixStream& w, std::size_t len, std::size_t horizon);

/// Rauzy graph of order 1: adjacency[a][b] iff "ab" occurs in w[0, horizon).
std::vector<std::vector<bool>> rauzy_graph1(PrefixStream& w, std::size_t horizon);

}  // namespace welldoc
