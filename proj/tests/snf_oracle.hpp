#pragma once

// Independent oracle for the Z^n generation test: diagonalize the matrix
// of generators by integer row/column operations (Smith-style) and check
// that all n diagonal entries are units. Kept free of the production
// generates_Z code path.

#include "welldoc/zlinalg.hpp"

namespace welldoc::testutil {

inline bool generates_Z_oracle(const IntVectorSet& vectors) {
    if (vectors.empty()) return false;
    std::size_t rows = vectors.size(), cols = vectors[0].size();
    IntMatrix m(vectors.begin(), vectors.end());

    std::size_t t = 0;
    std::size_t units = 0;
    while (t < rows && t < cols) {
        // Pivot: minimal non-zero absolute value in the trailing block.
        std::size_t pr = t, pc = t;
        BigInt best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
                    best = abs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[t], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder became the smaller pivot
                    std::swap(m[t], m[i]);
                    reduced = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    reduced = false;
                }
            }
        }
        if (abs(m[t][t]) == 1) ++units;
        ++t;
    }
    // The quotient Z^cols / rowspace is trivial iff there are cols
    // diagonal entries and each is a unit.
    return units == cols;
}

}  // namespace welldoc::testutil
