#pragma once

#include <optional>
#include <string>
#include <vector>

#include "welldoc/returns.hpp"
#include "welldoc/zlinalg.hpp"

namespace welldoc {

enum class Verdict { Welldoc, NotWelldoc, NotRecurrentHenceNotWelldoc };

std::string verdict_name(Verdict v);

struct RecurrenceTrace {
    bool recurrent = false;
    std::size_t steps = 0;                       // iterations until letter-reachability stabilized
    std::vector<std::vector<bool>> letter_sets;  // letter_sets[a][b]: b reachable from a
};

struct WelldocVerdict {
    Verdict verdict = Verdict::NotWelldoc;
    RecurrenceTrace recurrence;
    BigInt determinant = 0;
    bool binary_shortcut_used = false;
    bool degenerate = false;  // fixed point uses a single effective letter
    std::optional<ReturnSet> returns;
    std::optional<GenerationCertificate> generation;
    std::vector<std::string> reasons;

    std::string to_json(const Morphism& phi) const;
};

/// Recurrence of the fixed point at `start`: the letter-set maps of
/// increasing powers of phi stabilize within sigma^2 steps, and the word
/// is recurrent iff its first letter is reachable from the expansion tail.
RecurrenceTrace is_recurrent(const Morphism& phi, Letter start);

/// Full decision pipeline: recurrence, determinant, binary shortcut or
/// the return-vector generation test.
WelldocVerdict decide_welldoc(const Morphism& phi);

/// X_{u,m} observed within the horizon, plus the lexicographically least
/// missing vector when coverage is partial.
struct EmpiricalCell {
    Word factor;
    unsigned long long modulus = 0;
    std::size_t observed = 0;      // |X_{u,m}|
    unsigned long long space = 0;  // m^sigma
    std::optional<VecModM> witness;  // least missing vector, if any
    bool stabilized = false;         // no growth over the last half of the scan
    std::size_t occurrences = 0;
    std::vector<VecModM> vectors;    // the observed set, lexicographically sorted
};

EmpiricalCell empirical_X(PrefixStream& w, const Word& u, unsigned long long m,
                          std::size_t horizon);

enum class EmpiricalVerdict { ConsistentWithWelldoc, Falsified, Inconclusive };

struct EmpiricalReport {
    EmpiricalVerdict verdict = EmpiricalVerdict::ConsistentWithWelldoc;
    std::size_t horizon = 0;
    std::vector<EmpiricalCell> cells;
    std::optional<std::size_t> first_falsified;  // index into cells

    std::string to_json(const Morphism& phi) const;
};

/// Brute-force verifier: coverage of X_{u,m} for every observed factor
/// with |u| <= lmax and every modulus 2..mmax.
EmpiricalReport empirical_welldoc(const Morphism& phi, std::size_t lmax,
                                  unsigned long long mmax, std::size_t horizon);

}  // namespace welldoc
