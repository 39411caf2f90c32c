#include "welldoc/zlinalg.hpp"

#include <numeric>
#include <stdexcept>

namespace welldoc {

namespace {

void check_square(const IntMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("matrix is not square");
}

void check_prime(unsigned long long p) {
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

unsigned long long mod_reduce(const BigInt& v, unsigned long long p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<unsigned long long>();
}

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long p) {
    return static_cast<unsigned long long>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long long powmod(unsigned long long base, unsigned long long exp, unsigned long long p) {
    unsigned long long r = 1 % p;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

}  // namespace

BigInt det(const IntMatrix& input) {
    check_square(input);
    std::size_t n = input.size();
    if (n == 0) return 1;
    IntMatrix m = input;

    // Bareiss fraction-free elimination; all divisions are exact.
    BigInt prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool is_prime(unsigned long long p) {
    if (p < 2) return false;
    for (unsigned long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::size_t rank_mod_p(const IntVectorSet& vectors, unsigned long long p) {
    check_prime(p);
    if (vectors.empty()) return 0;
    std::size_t n = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != n) throw std::invalid_argument("vector dimension mismatch");

    std::vector<std::vector<unsigned long long>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        std::vector<unsigned long long> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = mod_reduce(v[j], p);
        rows.push_back(std::move(r));
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        unsigned long long inv = powmod(rows[rank][col], p - 2, p);
        for (std::size_t j = col; j < n; ++j) rows[rank][j] = mulmod(rows[rank][j], inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            unsigned long long f = rows[i][col];
            for (std::size_t j = col; j < n; ++j) {
                unsigned long long sub = mulmod(f, rows[rank][j], p);
                rows[i][j] = (rows[i][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

bool generates_mod_p(const IntVectorSet& vectors, unsigned long long p) {
    if (vectors.empty()) return false;
    return rank_mod_p(vectors, p) == vectors[0].size();
}

std::vector<unsigned long long> prime_factors(const BigInt& k) {
    if (k == 0) throw std::invalid_argument("cannot factor 0");
    BigInt n = abs(k);
    std::vector<unsigned long long> out;
    for (BigInt d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d.convert_to<unsigned long long>());
            n /= d;
        }
    }
    if (n > 1) out.push_back(n.convert_to<unsigned long long>());
    return out;
}

GenerationCertificate generates_Z(const IntVectorSet& vectors) {
    GenerationCertificate cert;
    if (vectors.empty()) throw std::invalid_argument("empty vector set");
    std::size_t n = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != n) throw std::invalid_argument("vector dimension mismatch");

    // Stage 1: spanning mod the initial prime 2.
    cert.primes_checked.push_back(2);
    if (!generates_mod_p(vectors, 2)) {
        cert.failing_prime = 2;
        return cert;
    }

    // Stage 2: greedy mod-2 basis in input order, then recheck at every
    // prime dividing its integer determinant.
    IntVectorSet basis;
    for (std::size_t i = 0; i < vectors.size() && basis.size() < n; ++i) {
        basis.push_back(vectors[i]);
        if (rank_mod_p(basis, 2) < basis.size())
            basis.pop_back();
        else
            cert.basis_indices.push_back(i);
    }

    IntMatrix basis_rows(basis.begin(), basis.end());
    cert.basis_det = det(basis_rows);

    for (unsigned long long p : prime_factors(cert.basis_det)) {
        if (p == 2) continue;  // already checked
        if (!cert.primes_checked.empty() && cert.primes_checked.back() == p) continue;
        cert.primes_checked.push_back(p);
        if (!generates_mod_p(vectors, p)) {
            cert.failing_prime = p;
            return cert;
        }
    }
    cert.generates = true;
    return cert;
}

IntMatrix inverse_mod_m(const IntMatrix& input, unsigned long long modulus) {
    check_square(input);
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    std::size_t n = input.size();

    BigInt d = det(input);
    BigInt g = gcd(BigInt(mod_reduce(d, modulus)), BigInt(modulus));
    if (g != 1)
        throw std::domain_error("matrix not invertible mod " + std::to_string(modulus) +
                                ": gcd(det, m) = " + g.str());

    // det^{-1} mod m by extended Euclid.
    long long m0 = static_cast<long long>(modulus);
    long long a = static_cast<long long>(mod_reduce(d, modulus)), b = m0;
    long long x0 = 1, x1 = 0;
    while (b) {
        long long q = a / b;
        std::swap(a -= q * b, b);
        std::swap(x0 -= q * x1, x1);
    }
    BigInt det_inv = ((x0 % m0) + m0) % m0;

    // Adjugate via cofactors; fine for the small orders used here.
    IntMatrix inv(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor;
            minor.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;  // adjugate transposes the cofactor matrix
                IntVector row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(input[r][c]);
                minor.push_back(std::move(row));
            }
            BigInt cof = det(minor);
            if ((i + j) % 2) cof = -cof;
            inv[i][j] = mod_reduce(cof * det_inv, modulus);
        }
    }
    return inv;
}

}  // namespace welldoc
