// Exact-arithmetic LLL reduction with a recorded unimodular transform, an
// independent reducedness checker, and minimal-polynomial detection for a
// truncated real value (the algdep construction).
#pragma once

#include <optional>
#include <vector>

#include "gfguess/errors.hpp"
#include "gfguess/numerics.hpp"

namespace gfguess {

struct IntMatrix {
    std::vector<std::vector<Int>> rows;  // row-major lattice basis

    size_t row_count() const { return rows.size(); }
    size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }

    bool operator==(const IntMatrix& o) const { return rows == o.rows; }
};

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace detail {

struct GramSchmidt {
    std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
    std::vector<Rat> norm;             // |b*_i|^2

    // throws dependent_rows_error on rank deficiency
    static GramSchmidt compute(const IntMatrix& basis) {
        size_t n = basis.row_count(), dim = basis.col_count();
        GramSchmidt gs;
        gs.mu.assign(n, std::vector<Rat>(n, Rat(0)));
        gs.norm.assign(n, Rat(0));
        std::vector<std::vector<Rat>> star(n, std::vector<Rat>(dim));
        for (size_t i = 0; i < n; ++i) {
            for (size_t c = 0; c < dim; ++c) star[i][c] = Rat(basis.rows[i][c]);
            for (size_t j = 0; j < i; ++j) {
                Rat proj;
                for (size_t c = 0; c < dim; ++c) proj += Rat(basis.rows[i][c]) * star[j][c];
                Rat m = proj / gs.norm[j];
                gs.mu[i][j] = m;
                for (size_t c = 0; c < dim; ++c) star[i][c] -= m * star[j][c];
            }
            for (size_t c = 0; c < dim; ++c) gs.norm[i] += star[i][c] * star[i][c];
            if (gs.norm[i] == 0) throw dependent_rows_error();
        }
        return gs;
    }
};

}  // namespace detail

struct LllResult {
    IntMatrix reduced;
    IntMatrix transform;  // unimodular; transform * input = reduced
};

// Classic LLL with exact rational Gram-Schmidt. Output is size-reduced
// (|mu_ij| <= 1/2) and satisfies the Lovasz condition with parameter delta.
inline LllResult lll(const IntMatrix& basis, const Rat& delta = Rat(3, 4)) {
    if (delta <= Rat(1, 4) || delta >= 1)
        throw std::invalid_argument("lll: delta must lie in (1/4, 1)");
    size_t n = basis.row_count();
    LllResult res;
    res.reduced = basis;
    res.transform.rows.assign(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) res.transform.rows[i][i] = 1;
    if (n <= 1) {
        if (n == 1 && dot(basis.rows[0], basis.rows[0]) == 0) throw dependent_rows_error();
        return res;
    }

    auto& b = res.reduced.rows;
    auto& u = res.transform.rows;
    auto gs = detail::GramSchmidt::compute(res.reduced);

    auto size_reduce = [&](size_t k, size_t j) {
        Rat m = gs.mu[k][j];
        Int q = round_half_even(m);
        if (q == 0) return;
        for (size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[j][c];
        for (size_t c = 0; c < n; ++c) u[k][c] -= q * u[j][c];
        for (size_t t = 0; t < j; ++t) gs.mu[k][t] -= Rat(q) * gs.mu[j][t];
        gs.mu[k][j] -= Rat(q);
    };

    size_t k = 1;
    while (k < n) {
        for (size_t j = k; j-- > 0;) size_reduce(k, j);
        Rat lhs = gs.norm[k];
        Rat rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            std::swap(u[k], u[k - 1]);
            gs = detail::GramSchmidt::compute(res.reduced);
            k = std::max<size_t>(1, k - 1);
        }
    }
    return res;
}

// Independent verification that a basis is LLL-reduced; recomputes the
// Gram-Schmidt data from scratch.
inline bool lll_check(const IntMatrix& basis, const Rat& delta = Rat(3, 4)) {
    auto gs = detail::GramSchmidt::compute(basis);
    size_t n = basis.row_count();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (::abs(gs.mu[i][j]) > Rat(1, 2)) return false;
    for (size_t k = 1; k < n; ++k)
        if (gs.norm[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm[k - 1])
            return false;
    return true;
}

inline Rat determinant(const IntMatrix& m) {
    size_t n = m.row_count();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m.rows[i][j]);
    Rat det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

inline bool is_unimodular(const IntMatrix& m) {
    Rat d = determinant(m);
    return d == 1 || d == -1;
}

struct ResidualReport {
    bool pass = false;
    Fixed residual;   // |P(alpha)| at alpha's scale
    Int height;       // H(P)
};

// |P(alpha)| must be H(P) * 10^slack_digits below the working precision for
// the candidate to count as a plausible vanishing.
inline ResidualReport residual_check(const IntPoly& p, const Fixed& alpha, long slack_digits) {
    ResidualReport rep;
    rep.residual = poly_eval(p, alpha).abs();
    rep.height = poly_height(p);
    // |P(alpha)| <= H * 10^-(p - slack)  <=>  mantissa <= H * 10^slack
    rep.pass = rep.residual.mantissa <= rep.height * pow10(slack_digits);
    return rep;
}

struct AlgdepOptions {
    Int weight = 1;
    Rat delta = Rat(3, 4);
    long slack_digits = 20;
};

// Integer minimal-polynomial candidate for a truncated real value: builds
// the standard (maxDeg+1)-row lattice [e_i | weight * round(10^p alpha^i)],
// reduces it, and reads the polynomial from the minimal-norm reduced row
// with nonzero polynomial part (ties: lower degree, then smaller height).
// Returns nullopt when the candidate fails the residual check, which signals
// either a too-low degree bound or too little precision.
inline std::optional<IntPoly> algdep(const Fixed& alpha, long max_deg,
                                     const AlgdepOptions& opt = {}) {
    if (max_deg < 1) throw std::invalid_argument("algdep: max_deg < 1");
    long p = alpha.scale;
    IntMatrix basis;
    for (long i = 0; i <= max_deg; ++i) {
        std::vector<Int> row(static_cast<size_t>(max_deg) + 2, Int(0));
        row[static_cast<size_t>(i)] = 1;
        row.back() = opt.weight * fixed_pow(alpha, static_cast<unsigned long>(i), p).mantissa;
        basis.rows.push_back(std::move(row));
    }
    IntMatrix reduced = lll(basis, opt.delta).reduced;

    const std::vector<Int>* best = nullptr;
    Int best_norm;
    long best_deg = 0;
    Int best_height;
    for (const auto& row : reduced.rows) {
        IntPoly cand(std::vector<Int>(row.begin(), row.end() - 1));
        if (cand.is_zero()) continue;
        Int norm = dot(row, row);
        long deg = cand.degree();
        Int height = poly_height(cand);
        if (!best || norm < best_norm ||
            (norm == best_norm && (deg < best_deg || (deg == best_deg && height < best_height)))) {
            best = &row;
            best_norm = norm;
            best_deg = deg;
            best_height = height;
        }
    }
    if (!best) return std::nullopt;
    IntPoly poly = primitive_part(IntPoly(std::vector<Int>(best->begin(), best->end() - 1))).primitive;
    if (!residual_check(poly, alpha, opt.slack_digits).pass) return std::nullopt;
    return poly;
}

}  // namespace gfguess
