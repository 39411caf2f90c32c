#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace welldoc {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;
using IntVector = std::vector<BigInt>;
using IntVectorSet = std::vector<IntVector>;

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det(const IntMatrix& m);

bool is_prime(unsigned long long p);

/// Rank of the vectors reduced mod p, by elimination over Z/pZ.
std::size_t rank_mod_p(const IntVectorSet& vectors, unsigned long long p);

/// True iff the vectors span (Z/pZ)^n, i.e. rank mod p equals the dimension.
bool generates_mod_p(const IntVectorSet& vectors, unsigned long long p);

/// Trial-division factorization of |k| (with multiplicity), sorted.
std::vector<unsigned long long> prime_factors(const BigInt& k);

/// Outcome of the two-stage Z^n generation test.
struct GenerationCertificate {
    bool generates = false;
    std::vector<std::size_t> basis_indices;  // first mod-2-independent basis, in input order
    BigInt basis_det = 0;                    // integer determinant k of that basis
    std::vector<unsigned long long> primes_checked;
    std::optional<unsigned long long> failing_prime;
};

/// Decides whether the vectors generate Z^n as an additive group.
///
/// Stage 1 tests spanning mod 2; failure is final with witness prime 2.
/// Stage 2 picks the first n vectors independent mod 2, takes their exact
/// determinant k, and retests spanning mod every prime divisor of k
/// (primes coprime to k are automatic).
GenerationCertificate generates_Z(const IntVectorSet& vectors);

/// Inverse of m mod `modulus`; requires gcd(det, modulus) = 1.
/// Throws std::domain_error carrying the gcd witness otherwise.
IntMatrix inverse_mod_m(const IntMatrix& m, unsigned long long modulus);

}  // namespace welldoc
