// Bivariate polynomials sum_j q_j(z) * y^j over Q: the shape of a guessed
// algebraic equation for a generating function y = S(z).
#pragma once

#include <vector>

#include "gfguess/linalg.hpp"
#include "gfguess/numerics.hpp"

namespace gfguess {

struct BivariatePoly {
    std::vector<PolyQ> y_coeffs;  // q_0(z) .. q_J(z)

    BivariatePoly() = default;
    explicit BivariatePoly(std::vector<PolyQ> qs) : y_coeffs(std::move(qs)) { trim(); }

    void trim() {
        while (!y_coeffs.empty() && y_coeffs.back().is_zero()) y_coeffs.pop_back();
    }

    bool is_zero() const { return y_coeffs.empty(); }
    long y_degree() const { return static_cast<long>(y_coeffs.size()) - 1; }

    long z_degree() const {
        long d = 0;
        for (const auto& q : y_coeffs) d = std::max(d, q.degree());
        return d;
    }

    const PolyQ& coeff(size_t j) const {
        static const PolyQ zero;
        return j < y_coeffs.size() ? y_coeffs[j] : zero;
    }

    // d/dy
    BivariatePoly y_derivative() const {
        std::vector<PolyQ> out;
        for (size_t j = 1; j < y_coeffs.size(); ++j)
            out.push_back(poly_scale(y_coeffs[j], Rat(static_cast<long>(j))));
        return BivariatePoly(std::move(out));
    }

    // P(z0, y) as a univariate polynomial in y.
    PolyQ at_z(const Rat& z0) const {
        std::vector<Rat> c;
        c.reserve(y_coeffs.size());
        for (const auto& q : y_coeffs) c.push_back(poly_eval(q, z0));
        return PolyQ(std::move(c));
    }

    // All coefficients integer, globally content 1, and the leading
    // coefficient in the canonical order (q_0 constant term first, ascending
    // in z, then q_1, ...; the last nonzero entry is the leading one)
    // positive.
    BivariatePoly normalized(long z_pad = -1) const {
        long zd = std::max(z_degree(), z_pad);
        std::vector<Rat> flat;
        for (const auto& q : y_coeffs)
            for (long k = 0; k <= zd; ++k) flat.push_back(q.coeff(static_cast<size_t>(k)));
        std::vector<Int> cleared = clear_denominators(flat);
        std::vector<PolyQ> out;
        size_t idx = 0;
        for (size_t j = 0; j < y_coeffs.size(); ++j) {
            std::vector<Rat> c;
            for (long k = 0; k <= zd; ++k) c.emplace_back(cleared[idx++]);
            out.emplace_back(std::move(c));
        }
        return BivariatePoly(std::move(out));
    }

    bool operator==(const BivariatePoly& o) const { return y_coeffs == o.y_coeffs; }
};

}  // namespace gfguess
