// End-to-end acceptance checks. Each criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "snf_oracle.hpp"
#include "test_util.hpp"
#include "welldoc/prng.hpp"
#include "welldoc/welldoc.hpp"

using namespace welldoc;
using namespace welldoc::testutil;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("exceeded time budget");
    }
    std::printf("%s  %2d  %s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::set<Word> word_set(const ReturnSet& rs) {
    return std::set<Word>(rs.words.begin(), rs.words.end());
}

std::set<Parikh> vector_set(const ReturnSet& rs) {
    return std::set<Parikh>(rs.vectors.begin(), rs.vectors.end());
}

}  // namespace

int main() {
    criterion(1, "decision on 3;0->02;1->101;2->102: det 1, returns {01,021}, fails at 2",
              1.0, [](std::string& detail) {
        WelldocVerdict v = decide_welldoc(non_welldoc_det1());
        if (v.determinant != 1) { detail = "det " + v.determinant.str(); return false; }
        if (!v.returns || word_set(*v.returns) != std::set<Word>{word_from_string("01"),
                                                                 word_from_string("021")}) {
            detail = "unexpected return set";
            return false;
        }
        if (vector_set(*v.returns) != std::set<Parikh>{{1, 1, 0}, {1, 1, 1}}) {
            detail = "unexpected return vectors";
            return false;
        }
        if (!v.generation || v.generation->generates ||
            !v.generation->failing_prime || *v.generation->failing_prime != 2) {
            detail = "generation certificate should fail at prime 2";
            return false;
        }
        return v.verdict == Verdict::NotWelldoc;
    });

    criterion(2, "empirical falsification of the same morphism at u=0, m=2", 5.0,
              [](std::string& detail) {
        PrefixStream w(non_welldoc_det1(), 0);
        EmpiricalCell cell = empirical_X(w, {0}, 2, 100'000);
        std::vector<VecModM> expect{{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}};
        if (cell.vectors != expect) { detail = "unexpected X_{0,2}"; return false; }
        if (!cell.witness || *cell.witness != VecModM{0, 1, 0}) {
            detail = "witness should be (0,1,0)";
            return false;
        }
        EmpiricalReport rep = empirical_welldoc(non_welldoc_det1(), 1, 2, 100'000);
        return rep.verdict == EmpiricalVerdict::Falsified && cell.stabilized;
    });

    criterion(3, "fibonacci: det -1 WELLDOC, full coverage |u|<=5, m<=5 at 10^6", 30.0,
              [](std::string& detail) {
        WelldocVerdict v = decide_welldoc(fibonacci());
        if (v.verdict != Verdict::Welldoc || v.determinant != -1) {
            detail = "decision should be WELLDOC with det -1";
            return false;
        }
        EmpiricalReport rep = empirical_welldoc(fibonacci(), 5, 5, 1'000'000);
        for (const EmpiricalCell& c : rep.cells)
            if (c.observed != c.space) {
                detail = "partial coverage at u=" + word_to_string(c.factor) +
                         " m=" + std::to_string(c.modulus);
                return false;
            }
        return rep.verdict == EmpiricalVerdict::ConsistentWithWelldoc;
    });

    criterion(4, "thue-morse: det 0 NOT_WELLDOC; scan finds a stabilized violation", 60.0,
              [](std::string& detail) {
        WelldocVerdict v = decide_welldoc(thue_morse());
        if (v.verdict != Verdict::NotWelldoc || v.determinant != 0) {
            detail = "decision should be NOT_WELLDOC with det 0";
            return false;
        }
        EmpiricalReport rep = empirical_welldoc(thue_morse(), 4, 4, 1'000'000);
        if (rep.verdict != EmpiricalVerdict::Falsified || !rep.first_falsified) {
            detail = "scan should falsify";
            return false;
        }
        const EmpiricalCell& c = rep.cells[*rep.first_falsified];
        detail = "violation at u=" + word_to_string(c.factor) +
                 " m=" + std::to_string(c.modulus) + ", coverage " +
                 std::to_string(c.observed) + "/" + std::to_string(c.space);
        // Frozen from a prior run: the first violation is u=0, m=3 with
        // only 6 of 9 residue classes ever reached.
        if (c.factor != Word{0} || c.modulus != 3 || c.observed != 6) return false;
        return c.stabilized && c.observed < c.space;
    });

    criterion(5, "tribonacci: det 1, returns {0,01,02}, WELLDOC", 5.0,
              [](std::string& detail) {
        WelldocVerdict v = decide_welldoc(tribonacci());
        if (v.determinant != 1) { detail = "det " + v.determinant.str(); return false; }
        if (!v.returns ||
            word_set(*v.returns) != std::set<Word>{word_from_string("0"),
                                                   word_from_string("01"),
                                                   word_from_string("02")}) {
            detail = "unexpected return set";
            return false;
        }
        if (vector_set(*v.returns) !=
            std::set<Parikh>{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}) {
            detail = "unexpected return vectors";
            return false;
        }
        return v.verdict == Verdict::Welldoc;
    });

    criterion(6, "lattice generation vs diagonalization oracle, 1000 random sets", 30.0,
              [](std::string& detail) {
        std::mt19937 rng(101);
        std::uniform_int_distribution<long long> entry(-10, 10);
        int disagreements = 0;
        for (int i = 0; i < 1000; ++i) {
            std::size_t n = 1 + rng() % 4;
            std::size_t count = n + rng() % 3;
            IntVectorSet vs(count, IntVector(n));
            for (auto& v : vs)
                for (auto& x : v) x = entry(rng);
            if (generates_Z(vs).generates != generates_Z_oracle(vs)) ++disagreements;
        }
        detail = std::to_string(disagreements) + " disagreements";
        return disagreements == 0;
    });

    criterion(7, "class tables stabilize below sigma^2 m^sigma and stay fixed", 30.0,
              [](std::string& detail) {
        for (unsigned long long m : {2ull, 3ull}) {
            for (const Morphism& phi :
                 {fibonacci(), thue_morse(), tribonacci(), non_welldoc_det1()}) {
                STable st = s_table_fixpoint(phi, m);
                unsigned long long bound = phi.sigma() * phi.sigma();
                for (std::size_t i = 0; i < phi.sigma(); ++i) bound *= m;
                if (st.step >= bound) {
                    detail = "stabilization step " + std::to_string(st.step) +
                             " not below " + std::to_string(bound);
                    return false;
                }
                if (s_table_at(phi, m, st.step + 1).sets != st.sets) {
                    detail = "table changed after the claimed fixpoint (" +
                             phi.to_string() + ", m=" + std::to_string(m) + ")";
                    return false;
                }
            }
        }
        return true;
    });

    criterion(8, "abelianization identity on 500 random morphisms", 10.0,
              [](std::string& detail) {
        std::mt19937 rng(103);
        for (int i = 0; i < 500; ++i) {
            Morphism phi = random_morphism(rng);
            Word u = random_word(rng, phi.sigma(), 8);
            auto a = phi.incidence_matrix();
            Parikh pu = parikh(u, phi.sigma());
            Parikh expect(phi.sigma(), 0);
            for (std::size_t r = 0; r < phi.sigma(); ++r)
                for (std::size_t c = 0; c < phi.sigma(); ++c) expect[r] += a[r][c] * pu[c];
            if (parikh(phi.apply(u), phi.sigma()) != expect) {
                detail = "mismatch for " + phi.to_string();
                return false;
            }
        }
        return true;
    });

    criterion(9, "200 random binary recurrent det +-1 morphisms: returns generate Z^2",
              60.0, [](std::string& detail) {
        std::mt19937 rng(107);
        int done = 0;
        while (done < 200) {
            Morphism phi = random_prolongable(rng, 2, 4);
            auto inc = phi.incidence_matrix();
            long long d = inc[0][0] * inc[1][1] - inc[0][1] * inc[1][0];
            if (d != 1 && d != -1) continue;
            if (!is_recurrent(phi, 0).recurrent) continue;
            ++done;
            ReturnSet rs = returns_complete(phi);
            IntVectorSet vecs;
            for (const Parikh& p : rs.vectors) vecs.emplace_back(p.begin(), p.end());
            if (!generates_Z(vecs).generates) {
                detail = "counterexample: " + phi.to_string();
                return false;
            }
        }
        return true;
    });

    criterion(10, "fibonacci-combined counters mod 5: pair coverage 1.0 vs 0.2", 1.0,
              [](std::string& detail) {
        std::vector<LcgParams> counters(2, LcgParams{1, 1, 5, 0});
        CombinedStream combined(PrefixStream(fibonacci(), 0), counters);
        CoverageResult full = tuple_coverage(combined, 2, 10'000);
        if (full.missing != 0) {
            detail = "combined coverage " + std::to_string(full.fraction);
            return false;
        }
        Morphism constant(1, {Word{0, 0}});
        CombinedStream single(PrefixStream(constant, 0), {LcgParams{1, 1, 5, 0}});
        CoverageResult lattice = tuple_coverage(single, 2, 10'000);
        if (lattice.distinct != 5) {
            detail = "single-generator coverage " + std::to_string(lattice.fraction);
            return false;
        }
        return true;
    });

    if (failures == 0) std::printf("all 10 acceptance criteria passed\n");
    return failures;
}
