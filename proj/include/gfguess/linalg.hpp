// Exact rational linear algebra: null-space computation by Gaussian
// elimination, shared by the recurrence fitter and the direct guesser.
#pragma once

#include <vector>

#include "gfguess/numerics.hpp"

namespace gfguess {

using RatMatrix = std::vector<std::vector<Rat>>;

// Basis of the null space of an m x n matrix (rows x ncols), via fraction
// RREF. Each basis vector has one free column set to 1.
inline RatMatrix null_space(RatMatrix m, size_t ncols) {
    size_t nrows = m.size();
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; ++c) {
        size_t p = r;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[r], m[p]);
        Rat inv = m[r][c];
        for (size_t j = c; j < ncols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    RatMatrix basis;
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    for (size_t fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(ncols);
        v[fc] = 1;
        for (size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -m[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Scales a rational vector to integers with content 1; sign fixed so the
// last nonzero entry (the leading coefficient in ascending polynomial
// order) is positive.
inline std::vector<Int> clear_denominators(const std::vector<Rat>& v) {
    Int l(1);
    for (const auto& c : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> out;
    out.reserve(v.size());
    Int g;
    for (const auto& c : v) {
        Rat s = c * Rat(l);
        out.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g != 0)
        for (auto& x : out) x /= g;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
        if (*it != 0) {
            if (*it < 0)
                for (auto& y : out) y = -y;
            break;
        }
    }
    return out;
}

// Total bit size of a cleared integer vector; the tie-breaker for picking a
// canonical kernel vector.
inline size_t vector_bit_size(const std::vector<Int>& v) {
    size_t bits = 0;
    for (const auto& x : v) bits += mpz_sizeinbase(x.get_mpz_t(), 2);
    return bits;
}

}  // namespace gfguess
