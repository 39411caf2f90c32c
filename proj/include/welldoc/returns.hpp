#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "welldoc/prefix_stream.hpp"

namespace welldoc {

enum class Completeness { HorizonOnly, Certified };

/// Return words to a target factor, with their Parikh vectors.
struct ReturnSet {
    Word target;
    std::vector<Word> words;     // distinct, in order of first appearance
    std::vector<Parikh> vectors; // vectors[i] = parikh(words[i])
    Completeness completeness = Completeness::HorizonOnly;
    std::size_t stabilization_step = 0;  // s-table fixpoint step (certified only)
    unsigned long long modulus = 0;      // working modulus of the certificate

    std::string to_json() const;
};

using VecModM = std::vector<unsigned long long>;

/// Per letter pair (a,b): Parikh vectors mod m of factors of phi^i(0)
/// beginning with a and ending with b.
struct STable {
    std::size_t sigma = 0;
    unsigned long long modulus = 0;
    std::size_t step = 0;  // first i with S^i = S^{i+1} for all pairs
    std::vector<std::vector<std::set<VecModM>>> sets;  // sets[a][b]

    const std::set<VecModM>& at(Letter a, Letter b) const { return sets[a][b]; }
};

/// Returns to `target` among w[0, horizon): all distinct w[a_i, a_{i+1})
/// for consecutive occurrence positions. Requires >= 2 occurrences.
ReturnSet returns_by_scan(PrefixStream& w, const Word& target, std::size_t horizon);

/// Iterates S^i until it stabilizes over all letter pairs; the iteration
/// count is hard-capped at sigma^2 * m^sigma.
STable s_table_fixpoint(const Morphism& phi, unsigned long long m);

/// S^steps without the fixpoint stop, for cross-checking stabilization.
STable s_table_at(const Morphism& phi, unsigned long long m, std::size_t steps);

/// Complete set of return words to the first letter of the fixed point,
/// certified against the stabilized mod-m S_{0,0} group.
ReturnSet returns_complete(const Morphism& phi, unsigned long long m = 2);

/// Return enumeration through image decompositions, for morphisms whose
/// every image contains every letter. Candidates from the decomposition
/// phi(a) = x_a 0 v_{a,0} 0 ... 0 v_{a,k-1} 0 y_a are validated by an
/// occurrence scan.
ReturnSet returns_via_images(const Morphism& phi);

/// Mod-m subgroup of (Z/mZ)^sigma generated by a set of vectors
/// (closure under addition; shared by certificates and tests).
std::set<VecModM> subgroup_mod_m(const std::vector<VecModM>& generators,
                                 std::size_t sigma, unsigned long long m);

}  // namespace welldoc
