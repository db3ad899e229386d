// Fitting a polynomial-coefficient linear recurrence to a finite sequence by
// undetermined coefficients, compiling it into a linear-time term generator,
// and the successive-term ratio form for one-term recurrences.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfguess/errors.hpp"
#include "gfguess/linalg.hpp"
#include "gfguess/numerics.hpp"

namespace gfguess {

struct Sequence {
    std::vector<Rat> terms;  // a_0 .. a_N
    std::string label;

    size_t size() const { return terms.size(); }
};

// a_n * P_0(n) = sum_{i=1..k} a_{n-i} * P_i(n) + Q(n), valid for n >= seed
// count. Coefficients are canonicalized: integer, content 1, first nonzero
// coefficient positive. `initials` holds at least `order` seed terms; it is
// longer when P_0 has an integer root inside the fitted range, so extension
// starts past the last singularity.
struct PRecurrence {
    long order = 0;                 // k
    std::vector<PolyQ> coeffs;      // P_0 .. P_k
    std::optional<PolyQ> inhom;     // Q(n)
    std::vector<Rat> initials;

    long max_coeff_degree() const {
        long d = 0;
        for (const auto& p : coeffs) d = std::max(d, std::max(p.degree(), 0L));
        if (inhom) d = std::max(d, std::max(inhom->degree(), 0L));
        return d;
    }

    // (d, k+1) classification: max coefficient degree, number of terms.
    std::pair<long, long> type_tag() const { return {max_coeff_degree(), order + 1}; }

    // Residual of the defining equation at index n given a window of terms.
    Rat residual(const std::vector<Rat>& a, long n) const {
        Rat lhs = a[static_cast<size_t>(n)] * poly_eval(coeffs[0], Rat(n));
        Rat rhs;
        for (long i = 1; i <= order; ++i)
            rhs += a[static_cast<size_t>(n - i)] * poly_eval(coeffs[static_cast<size_t>(i)], Rat(n));
        if (inhom) rhs += poly_eval(*inhom, Rat(n));
        return lhs - rhs;
    }
};

namespace detail {

struct FitCandidate {
    PRecurrence rec;
    long max_degree;
    size_t bit_size;
};

// Candidate from one kernel vector, or nullopt if the P_0 block is zero or
// the leading polynomial vanishes too late in the range to bridge with seeds.
inline std::optional<FitCandidate> candidate_from_kernel(
    const std::vector<Rat>& v, const Sequence& seq, long k, long d, bool inhom) {
    size_t blk = static_cast<size_t>(d + 1);
    std::vector<Int> cleared = clear_denominators(v);
    std::vector<Rat> cv;
    cv.reserve(cleared.size());
    for (const auto& x : cleared) cv.emplace_back(x);

    PolyQ p0(std::vector<Rat>(cv.begin(), cv.begin() + blk));
    if (p0.is_zero()) return std::nullopt;

    long n_count = static_cast<long>(seq.size());
    long seed = k;
    for (long n = k; n <= n_count; ++n)
        if (poly_eval(p0, Rat(n)) == 0) seed = n + 1;
    if (seed > n_count) return std::nullopt;  // cannot bridge past the last root

    PRecurrence rec;
    rec.order = k;
    for (long i = 0; i <= k; ++i)
        rec.coeffs.emplace_back(std::vector<Rat>(cv.begin() + i * (d + 1),
                                                 cv.begin() + (i + 1) * (d + 1)));
    if (inhom) {
        PolyQ q(std::vector<Rat>(cv.begin() + (k + 1) * (d + 1), cv.end()));
        if (!q.is_zero()) rec.inhom = q;
    }
    rec.initials.assign(seq.terms.begin(), seq.terms.begin() + seed);
    return FitCandidate{std::move(rec), 0, vector_bit_size(cleared)};
}

}  // namespace detail

// Searches (order k, degree d) in ascending k+d, ties broken by smaller k;
// at each (k, d) the homogeneous fit is tried before the inhomogeneous one.
// A fit is accepted only when the linear system is overdetermined by at
// least `guard` equations and a kernel vector with usable leading
// coefficient exists; the kernel vector minimizing (max coefficient degree,
// bit size) is returned. Kernel vectors satisfy every fitted equation by
// construction, so the returned recurrence holds exactly on all of `seq`.
inline std::optional<PRecurrence> fit_recurrence(const Sequence& seq, long max_order,
                                                 long max_degree, long guard) {
    long n_terms = static_cast<long>(seq.size());
    long big_n = n_terms - 1;
    if (big_n < 2 + guard)
        throw insufficient_data_error("too few terms for any overdetermined fit");

    for (long s = 1; s <= max_order + max_degree; ++s) {
        for (long k = 1; k <= std::min(s, max_order); ++k) {
            long d = s - k;
            if (d > max_degree) continue;
            for (bool inhom : {false, true}) {
                long nunk = (d + 1) * (k + 1) + (inhom ? d + 1 : 0);
                long neq = n_terms - k;
                if (neq < nunk + guard) continue;

                RatMatrix rows;
                rows.reserve(static_cast<size_t>(neq));
                for (long n = k; n <= big_n; ++n) {
                    std::vector<Rat> row;
                    row.reserve(static_cast<size_t>(nunk));
                    Rat np(1);
                    std::vector<Rat> npow(static_cast<size_t>(d + 1));
                    for (long e = 0; e <= d; ++e) {
                        npow[static_cast<size_t>(e)] = np;
                        np *= Rat(n);
                    }
                    for (long i = 0; i <= k; ++i) {
                        Rat a = (i == 0) ? seq.terms[static_cast<size_t>(n)]
                                         : Rat(-seq.terms[static_cast<size_t>(n - i)]);
                        for (long e = 0; e <= d; ++e)
                            row.push_back(a * npow[static_cast<size_t>(e)]);
                    }
                    if (inhom)
                        for (long e = 0; e <= d; ++e)
                            row.push_back(-npow[static_cast<size_t>(e)]);
                    rows.push_back(std::move(row));
                }

                RatMatrix basis = null_space(std::move(rows), static_cast<size_t>(nunk));
                std::optional<detail::FitCandidate> best;
                for (const auto& v : basis) {
                    auto cand = detail::candidate_from_kernel(v, seq, k, d, inhom);
                    if (!cand) continue;
                    cand->max_degree = cand->rec.max_coeff_degree();
                    if (!best || std::pair(cand->max_degree, cand->bit_size) <
                                     std::pair(best->max_degree, best->bit_size))
                        best = std::move(cand);
                }
                if (best) return std::move(best->rec);
            }
        }
    }
    return std::nullopt;
}

// Terms 0 .. upTo. Seed terms come from rec.initials; each later term solves
// the recurrence for a_n in a single memoized pass (work linear in upTo).
// eval_count, when supplied, receives the number of recurrence evaluations.
inline Sequence extend_sequence(const PRecurrence& rec, long up_to,
                                size_t* eval_count = nullptr) {
    if (up_to < static_cast<long>(rec.initials.size()) - 1)
        up_to = static_cast<long>(rec.initials.size()) - 1;
    Sequence out;
    out.terms = rec.initials;
    out.terms.reserve(static_cast<size_t>(up_to) + 1);
    size_t evals = 0;
    for (long n = static_cast<long>(rec.initials.size()); n <= up_to; ++n) {
        Rat den = poly_eval(rec.coeffs[0], Rat(n));
        if (den == 0) throw singular_index_error(n);
        Rat num;
        for (long i = 1; i <= rec.order; ++i)
            num += out.terms[static_cast<size_t>(n - i)] *
                   poly_eval(rec.coeffs[static_cast<size_t>(i)], Rat(n));
        if (rec.inhom) num += poly_eval(*rec.inhom, Rat(n));
        out.terms.push_back(num / den);
        ++evals;
    }
    if (eval_count) *eval_count = evals;
    return out;
}

struct RationalFunction {
    IntPoly num;
    IntPoly den;
};

// a(n+1)/a(n) as a reduced rational function of n. Defined only for
// homogeneous one-term recurrences (order 1, no inhomogeneous part).
inline std::optional<RationalFunction> ratio_form(const PRecurrence& rec) {
    if (rec.order != 1 || rec.inhom) return std::nullopt;
    // a_{n+1} P_0(n+1) = a_n P_1(n+1)
    PolyQ num = poly_compose_shift(rec.coeffs[1], Rat(1));
    PolyQ den = poly_compose_shift(rec.coeffs[0], Rat(1));
    PolyQ g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    // joint normalization: integer, content 1 overall, positive leading denominator
    std::vector<Rat> joint = num.coeffs;
    joint.insert(joint.end(), den.coeffs.begin(), den.coeffs.end());
    std::vector<Int> cleared = clear_denominators(joint);
    std::vector<Int> nc(cleared.begin(), cleared.begin() + num.coeffs.size());
    std::vector<Int> dc(cleared.begin() + num.coeffs.size(), cleared.end());
    IntPoly ni(std::move(nc)), di(std::move(dc));
    if (!di.coeffs.empty() && di.coeffs.back() < 0) {
        for (auto& c : ni.coeffs) c = -c;
        for (auto& c : di.coeffs) c = -c;
    }
    return RationalFunction{std::move(ni), std::move(di)};
}

}  // namespace gfguess
