// Truncated power series over exact rationals, and high-precision evaluation
// of a recurrence-defined generating function at z = 1/m.
#pragma once

#include <algorithm>
#include <vector>

#include "gfguess/bivariate.hpp"
#include "gfguess/errors.hpp"
#include "gfguess/numerics.hpp"
#include "gfguess/recurrence.hpp"

namespace gfguess {

// Coefficients c_0 .. c_{N-1}; the series is known mod z^N and the order N
// is carried explicitly through every operation.
struct TruncatedSeries {
    std::vector<Rat> coeffs;

    long order() const { return static_cast<long>(coeffs.size()); }

    const Rat& coeff(size_t i) const {
        static const Rat zero;
        return i < coeffs.size() ? coeffs[i] : zero;
    }

    // index of the first nonzero coefficient, or order() for the zero series
    long valuation() const {
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) return static_cast<long>(i);
        return order();
    }

    bool operator==(const TruncatedSeries& o) const { return coeffs == o.coeffs; }
};

inline TruncatedSeries from_sequence(const Sequence& seq) {
    return TruncatedSeries{seq.terms};
}

inline TruncatedSeries add_trunc(const TruncatedSeries& a, const TruncatedSeries& b) {
    size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    TruncatedSeries out;
    out.coeffs.resize(n);
    for (size_t i = 0; i < n; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
}

inline TruncatedSeries scale_trunc(const TruncatedSeries& a, const Rat& s) {
    TruncatedSeries out = a;
    for (auto& c : out.coeffs) c *= s;
    return out;
}

// Exact Cauchy product truncated at the smaller input order.
inline TruncatedSeries mul_trunc(const TruncatedSeries& a, const TruncatedSeries& b) {
    size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    TruncatedSeries out;
    out.coeffs.resize(n);
    for (size_t i = 0; i < n && i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; i + j < n && j < b.coeffs.size(); ++j) {
            if (b.coeffs[j] == 0) continue;
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

inline TruncatedSeries pow_trunc(const TruncatedSeries& a, unsigned long k) {
    TruncatedSeries result;
    result.coeffs.assign(a.coeffs.size(), Rat(0));
    if (!result.coeffs.empty()) result.coeffs[0] = 1;
    TruncatedSeries base = a;
    while (k > 0) {
        if (k & 1) result = mul_trunc(result, base);
        k >>= 1;
        if (k > 0) base = mul_trunc(base, base);
    }
    return result;
}

// Multiplicative inverse mod z^N by Newton iteration; needs a unit constant term.
inline TruncatedSeries inv_trunc(const TruncatedSeries& f) {
    if (f.coeffs.empty() || f.coeffs[0] == 0)
        throw error("not-invertible", "series has zero constant term");
    size_t n = f.coeffs.size();
    TruncatedSeries inv;
    inv.coeffs = {Rat(1) / f.coeffs[0]};
    while (inv.coeffs.size() < n) {
        size_t m = std::min(inv.coeffs.size() * 2, n);
        TruncatedSeries fi{std::vector<Rat>(f.coeffs.begin(), f.coeffs.begin() + m)};
        inv.coeffs.resize(m, Rat(0));
        TruncatedSeries t = mul_trunc(fi, inv);
        for (auto& c : t.coeffs) c = -c;
        t.coeffs[0] += 2;
        inv = mul_trunc(inv, t);
    }
    return inv;
}

// sum_j q_j(z) * S(z)^j mod z^N, exactly (Horner in y).
inline TruncatedSeries substitute_series(const BivariatePoly& p, const TruncatedSeries& s) {
    size_t n = s.coeffs.size();
    auto poly_as_series = [&](const PolyQ& q) {
        TruncatedSeries t;
        t.coeffs.resize(n);
        for (size_t i = 0; i < n && i < q.coeffs.size(); ++i) t.coeffs[i] = q.coeffs[i];
        return t;
    };
    TruncatedSeries acc;
    acc.coeffs.assign(n, Rat(0));
    for (size_t jj = p.y_coeffs.size(); jj-- > 0;) {
        acc = mul_trunc(acc, s);
        acc = add_trunc(acc, poly_as_series(p.y_coeffs[jj]));
    }
    return acc;
}

// The unique series S with S(0) = a0 and P(z, S) = 0 mod z^N, by quadratic
// Newton lifting. a0 must be a simple root of P(0, y).
inline TruncatedSeries series_from_algebraic(const BivariatePoly& p, const Rat& a0, long n) {
    PolyQ p0 = p.at_z(Rat(0));
    if (poly_eval(p0, a0) != 0)
        throw error("no-root", "a0 is not a root of P(0, y)");
    BivariatePoly py = p.y_derivative();
    if (poly_eval(py.at_z(Rat(0)), a0) == 0)
        throw error("non-simple-root", "dP/dy vanishes at (0, a0)");
    TruncatedSeries s;
    if (n <= 0) return s;
    s.coeffs = {a0};
    while (s.order() < n) {
        long prec = std::min<long>(s.order() * 2, n);
        s.coeffs.resize(static_cast<size_t>(prec), Rat(0));
        TruncatedSeries f = substitute_series(p, s);
        TruncatedSeries fy = substitute_series(py, s);
        TruncatedSeries corr = mul_trunc(f, inv_trunc(fy));
        for (size_t i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] -= corr.coeffs[i];
    }
    return s;
}

struct EvalOptions {
    long guard_digits = 10;  // extra digits below 10^-p a term must reach
    long window = 5;         // consecutive terms that must satisfy the stop rule
    long term_cap_factor = 100;  // cap = factor * p terms
};

struct InverseIntEval {
    Fixed value;
    long terms_used = 0;
    Rat exact_partial;  // the partial sum the rounding was applied to
};

// sum_{n>=0} a_n / m^n with terms pulled lazily from the recurrence. Stops
// once `window` consecutive terms are below 10^-(p+guard_digits) in
// magnitude while the running ratio estimate satisfies |a_n/a_{n-1}|/m <
// 1/2; the geometric tail is then below 2 |a_n| / m^n. The partial sum is
// kept exact and rounded once, half to even, at scale p.
inline InverseIntEval eval_at_inverse_int_detail(const PRecurrence& rec, long m, long p,
                                                 const EvalOptions& opt = {}) {
    if (m < 2) throw std::invalid_argument("eval_at_inverse_int: m < 2");
    if (p < 1) throw std::invalid_argument("eval_at_inverse_int: p < 1");

    const Int threshold_scale = pow10(p + opt.guard_digits);
    const long cap = opt.term_cap_factor * p;

    Rat sum;
    Rat prev_term_abs;  // |a_{n-1}|
    Int m_pow(1);
    long consecutive = 0;
    bool ratio_bad_streak = false;

    std::vector<Rat> window_terms = rec.initials;
    long n = 0;
    while (true) {
        if (n > cap) {
            if (ratio_bad_streak)
                throw divergence_error("term ratio stayed above m/2; m too small for this growth");
            throw divergence_error("stopping rule did not fire within the term cap");
        }
        Rat a_n;
        if (n < static_cast<long>(window_terms.size())) {
            a_n = window_terms[static_cast<size_t>(n)];
        } else {
            Rat den = poly_eval(rec.coeffs[0], Rat(n));
            if (den == 0) throw singular_index_error(n);
            Rat num;
            for (long i = 1; i <= rec.order; ++i)
                num += window_terms[static_cast<size_t>(n - i)] *
                       poly_eval(rec.coeffs[static_cast<size_t>(i)], Rat(n));
            if (rec.inhom) num += poly_eval(*rec.inhom, Rat(n));
            a_n = num / den;
            window_terms.push_back(a_n);
        }
        sum += a_n / Rat(m_pow);

        Rat a_abs = ::abs(a_n);
        // |a_n|/m^n < 10^-(p+guard)  <=>  |num| * 10^(p+guard) < den * m^n
        bool small = a_abs.get_num() * threshold_scale < a_abs.get_den() * m_pow;
        // |a_n/a_{n-1}| / m < 1/2  <=>  2 |a_n| < m |a_{n-1}|  (true if a_n = 0)
        bool ratio_ok =
            a_n == 0 || (n > 0 && 2 * a_abs < Rat(m) * prev_term_abs);
        consecutive = (small && ratio_ok) ? consecutive + 1 : 0;
        ratio_bad_streak = !ratio_ok && n > 0;
        if (consecutive >= opt.window) {
            return InverseIntEval{rat_to_fixed(sum, p), n + 1, sum};
        }
        prev_term_abs = a_abs;
        m_pow *= m;
        ++n;
    }
}

inline Fixed eval_at_inverse_int(const PRecurrence& rec, long m, long p,
                                 const EvalOptions& opt = {}) {
    return eval_at_inverse_int_detail(rec, m, p, opt).value;
}

}  // namespace gfguess
