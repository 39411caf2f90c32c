#include <doctest.h>

#include "test_util.hpp"
#include "welldoc/prng.hpp"

using namespace welldoc;
using namespace welldoc::testutil;

namespace {

std::vector<std::uint64_t> take(CombinedStream& s, std::size_t n) {
    std::vector<std::uint64_t> out(n);
    for (auto& x : out) x = s.next();
    return out;
}

}  // namespace

TEST_CASE("lcg parameter parsing and validation") {
    LcgParams p = LcgParams::parse("1,1,5,0");
    CHECK(p.a == 1);
    CHECK(p.c == 1);
    CHECK(p.m == 5);
    CHECK(p.seed == 0);
    CHECK_THROWS_AS(LcgParams::parse("1,1,5"), std::invalid_argument);
    CHECK_THROWS_AS(LcgParams::parse("1,1,5,0,7"), std::invalid_argument);
    CHECK_THROWS_AS(LcgParams::parse("1,x,5,0"), std::invalid_argument);
    CHECK_THROWS_AS(LcgParams::parse("7,1,5,0"), std::invalid_argument);  // a >= m
    CHECK_THROWS_AS(LcgParams::parse("1,1,1,0"), std::invalid_argument);  // m < 2
}

TEST_CASE("lcg_next stepping") {
    LcgParams p{5, 3, 7, 0};
    CHECK(lcg_next(0, p) == 3);
    CHECK(lcg_next(3, p) == 4);   // 5*3+3 = 18 = 4 mod 7
    CHECK(lcg_next(4, p) == 2);   // 23 mod 7
    // Counter: a=1, c=1.
    LcgParams cnt{1, 1, 5, 0};
    std::uint64_t s = 0;
    for (int i = 1; i <= 12; ++i) {
        s = lcg_next(s, cnt);
        CHECK(s == static_cast<std::uint64_t>(i % 5));
    }
}

TEST_CASE("combined stream: fibonacci word with per-letter counters mod 5") {
    // w = 01001010...; each step emits the state of the generator for the
    // current letter, then advances only that generator. Frozen by hand
    // simulation.
    std::vector<LcgParams> counters(2, LcgParams{1, 1, 5, 0});
    CombinedStream s(PrefixStream(fibonacci(), 0), counters);
    CHECK(take(s, 8) == std::vector<std::uint64_t>{0, 0, 1, 2, 1, 3, 2, 4});
    CHECK(s.position() == 8);
    // 5 zeros and 3 ones consumed in w[0, 8).
    CHECK(s.counters() == std::vector<std::uint64_t>{5, 3});
}

TEST_CASE("combined stream equals interleaved reference generators") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        Morphism phi = tribonacci();
        std::uint64_t m = 2 + rng() % 30;
        std::vector<LcgParams> ps;
        for (std::size_t a = 0; a < phi.sigma(); ++a)
            ps.push_back(LcgParams{rng() % m, rng() % m, m, rng() % m});
        CombinedStream s(PrefixStream(phi, 0), ps);

        Word w = fixed_point_prefix(phi, 0, 500);
        std::vector<std::uint64_t> states;
        for (const LcgParams& p : ps) states.push_back(p.seed);
        for (std::size_t n = 0; n < 500; ++n) {
            std::uint64_t expect = states[w[n]];
            states[w[n]] = lcg_next(states[w[n]], ps[w[n]]);
            CHECK(s.next() == expect);
        }
    }
}

TEST_CASE("combined stream rejects mismatched or mixed parameters") {
    std::vector<LcgParams> one{LcgParams{1, 1, 5, 0}};
    CHECK_THROWS_AS(CombinedStream(PrefixStream(fibonacci(), 0), one),
                    std::invalid_argument);
    std::vector<LcgParams> mixed{LcgParams{1, 1, 5, 0}, LcgParams{1, 1, 7, 0}};
    CHECK_THROWS_AS(CombinedStream(PrefixStream(fibonacci(), 0), mixed),
                    std::invalid_argument);
}

TEST_CASE("pair coverage: combined counters fill the grid, a single lcg cannot") {
    std::vector<LcgParams> counters(2, LcgParams{1, 1, 5, 0});
    CombinedStream combined(PrefixStream(fibonacci(), 0), counters);
    CoverageResult full = tuple_coverage(combined, 2, 10000);
    CHECK(full.fraction == doctest::Approx(1.0));
    CHECK(full.missing == 0);

    // One counter alone: consecutive pairs are always (x, x+1) mod 5.
    Morphism constant(1, {Word{0, 0}});
    CombinedStream single(PrefixStream(constant, 0),
                          {LcgParams{1, 1, 5, 0}});
    CoverageResult lattice = tuple_coverage(single, 2, 10000);
    CHECK(lattice.distinct == 5);
    CHECK(lattice.fraction == doctest::Approx(0.2));
}

TEST_CASE("coverage fraction is monotone in the sample count") {
    std::vector<LcgParams> counters(2, LcgParams{1, 1, 5, 0});
    double prev = 0.0;
    for (std::size_t samples : {10, 100, 1000, 10000}) {
        CombinedStream s(PrefixStream(fibonacci(), 0), counters);
        CoverageResult r = tuple_coverage(s, 3, samples);
        CHECK(r.fraction >= prev);
        prev = r.fraction;
    }
}

TEST_CASE("coverage guards") {
    std::vector<LcgParams> counters(2, LcgParams{1, 1, 5, 0});
    CombinedStream s(PrefixStream(fibonacci(), 0), counters);
    CHECK_THROWS_AS(tuple_coverage(s, 0, 100), std::invalid_argument);
    CHECK_THROWS_AS(tuple_coverage(s, 200, 100), std::invalid_argument);

    std::vector<LcgParams> big(2, LcgParams{1, 1, 1000000007ull, 0});
    CombinedStream sb(PrefixStream(fibonacci(), 0), big);
    CHECK_THROWS_AS(tuple_coverage(sb, 8, 100), std::invalid_argument);
}
