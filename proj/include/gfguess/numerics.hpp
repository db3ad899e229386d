// Exact arithmetic kernel: arbitrary-precision integers and rationals
// (GMP-backed), fixed-point decimals, and univariate polynomials over Q.
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfguess {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(Int base, unsigned long k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

inline Int pow10(long p) {
    if (p < 0) throw std::invalid_argument("pow10: negative exponent");
    return pow_int(Int(10), static_cast<unsigned long>(p));
}

inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

// Nearest integer to num/den with ties to even. den must be positive.
inline Int div_round_half_even(const Int& num, const Int& den) {
    if (den <= 0) throw std::invalid_argument("div_round_half_even: den <= 0");
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int twice = 2 * r;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
        ++q;
    return q;
}

inline Int round_half_even(const Rat& x) {
    return div_round_half_even(x.get_num(), x.get_den());
}

// ---------------------------------------------------------------------------
// Fixed: arbitrary-precision fixed-point decimal, value = mantissa * 10^-scale.
// The scale is explicit and carried through every operation.
// ---------------------------------------------------------------------------
struct Fixed {
    Int mantissa;
    long scale = 0;

    Fixed() = default;
    Fixed(Int m, long s) : mantissa(std::move(m)), scale(s) {
        if (s < 0) throw std::invalid_argument("Fixed: negative scale");
    }

    Rat to_rational() const { return make_rat(mantissa, pow10(scale)); }

    Fixed rescaled(long p) const {
        if (p == scale) return *this;
        if (p > scale) return Fixed(mantissa * pow10(p - scale), p);
        return Fixed(div_round_half_even(mantissa, pow10(scale - p)), p);
    }

    bool is_negative() const { return mantissa < 0; }

    Fixed abs() const { return Fixed(::abs(mantissa), scale); }

    // Plain decimal rendering, e.g. "1.0101" or "-0.25".
    std::string to_string() const {
        Int m = ::abs(mantissa);
        std::string digits = m.get_str();
        std::string out = mantissa < 0 ? "-" : "";
        if (scale == 0) return out + digits;
        if (static_cast<long>(digits.size()) <= scale)
            digits.insert(0, static_cast<size_t>(scale) - digits.size() + 1, '0');
        out += digits.substr(0, digits.size() - static_cast<size_t>(scale));
        out += '.';
        out += digits.substr(digits.size() - static_cast<size_t>(scale));
        return out;
    }
};

// Rounds r to p decimal places, ties to even. |result - r| <= 10^-p / 2.
inline Fixed rat_to_fixed(const Rat& r, long p) {
    if (p < 0) throw std::invalid_argument("rat_to_fixed: p < 0");
    return Fixed(div_round_half_even(r.get_num() * pow10(p), r.get_den()), p);
}

inline Fixed fixed_add(const Fixed& a, const Fixed& b) {
    long p = std::max(a.scale, b.scale);
    return Fixed(a.rescaled(p).mantissa + b.rescaled(p).mantissa, p);
}

inline Fixed fixed_sub(const Fixed& a, const Fixed& b) {
    long p = std::max(a.scale, b.scale);
    return Fixed(a.rescaled(p).mantissa - b.rescaled(p).mantissa, p);
}

inline Fixed fixed_mul(const Fixed& a, const Fixed& b, long p) {
    Int prod = a.mantissa * b.mantissa;
    long s = a.scale + b.scale;
    return Fixed(std::move(prod), s).rescaled(p);
}

inline Fixed fixed_div(const Fixed& a, const Fixed& b, long p) {
    if (b.mantissa == 0) throw std::domain_error("fixed_div: division by zero");
    // a/b = a.mant * 10^(b.scale - a.scale) / b.mant, rounded to scale p
    Int num = a.mantissa * pow10(p + b.scale);
    Int den = b.mantissa * pow10(a.scale);
    if (den < 0) { num = -num; den = -den; }
    return Fixed(div_round_half_even(num, den), p);
}

// x^k by repeated squaring, every intermediate rounded to scale p.
// For |x| <= 2 the accumulated error is below (k+1) * 10^-p.
inline Fixed fixed_pow(const Fixed& x, unsigned long k, long p) {
    Fixed result(pow10(p), p);  // 1 at scale p
    Fixed base = x.rescaled(p);
    while (k > 0) {
        if (k & 1) result = fixed_mul(result, base, p);
        k >>= 1;
        if (k > 0) base = fixed_mul(base, base, p);
    }
    return result;
}

// Parses "d.ddd" (optionally signed); scale = number of fractional digits.
inline Fixed fixed_from_string(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Fixed(Int(s), 0);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    return Fixed(Int(digits), static_cast<long>(s.size() - dot - 1));
}

// ---------------------------------------------------------------------------
// PolyQ: univariate polynomial over Q, coefficients ascending, trailing zeros
// stripped so the leading coefficient is nonzero unless the poly is zero.
// ---------------------------------------------------------------------------
struct PolyQ {
    std::vector<Rat> coeffs;

    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    const Rat& coeff(size_t i) const {
        static const Rat zero;
        return i < coeffs.size() ? coeffs[i] : zero;
    }

    bool operator==(const PolyQ& o) const { return coeffs == o.coeffs; }
};

inline Rat poly_eval(const PolyQ& p, const Rat& x) {
    Rat acc;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return PolyQ(std::move(c));
}

inline PolyQ poly_scale(const PolyQ& a, const Rat& s) {
    std::vector<Rat> c(a.coeffs);
    for (auto& x : c) x *= s;
    return PolyQ(std::move(c));
}

inline PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rat> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] += a.coeffs[i] * b.coeffs[j];
    return PolyQ(std::move(c));
}

inline PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    return poly_add(a, poly_scale(b, Rat(-1)));
}

inline PolyQ poly_derivative(const PolyQ& a) {
    if (a.coeffs.size() <= 1) return PolyQ();
    std::vector<Rat> c(a.coeffs.size() - 1);
    for (size_t i = 1; i < a.coeffs.size(); ++i)
        c[i - 1] = a.coeffs[i] * Rat(static_cast<long>(i));
    return PolyQ(std::move(c));
}

// p(x + shift)
inline PolyQ poly_compose_shift(const PolyQ& p, const Rat& shift) {
    PolyQ acc;
    PolyQ lin(std::vector<Rat>{shift, Rat(1)});
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = poly_add(poly_mul(acc, lin), PolyQ(std::vector<Rat>{*it}));
    return acc;
}

// Exact division; throws if the remainder is nonzero.
inline PolyQ poly_divexact(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("poly_divexact: zero divisor");
    std::vector<Rat> rem = a.coeffs;
    long db = b.degree();
    if (a.is_zero()) return PolyQ();
    long dq = a.degree() - db;
    if (dq < 0) throw std::domain_error("poly_divexact: not divisible");
    std::vector<Rat> q(static_cast<size_t>(dq) + 1);
    for (long i = dq; i >= 0; --i) {
        Rat f = rem[static_cast<size_t>(i + db)] / b.coeffs.back();
        q[static_cast<size_t>(i)] = f;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i + j)] -= f * b.coeffs[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("poly_divexact: not divisible");
    return PolyQ(std::move(q));
}

// Monic gcd over Q (Euclid).
inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        // remainder of a by b
        std::vector<Rat> rem = a.coeffs;
        long db = b.degree();
        while (static_cast<long>(rem.size()) - 1 >= db) {
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (static_cast<long>(rem.size()) - 1 < db) break;
            Rat f = rem.back() / b.coeffs.back();
            long shift = static_cast<long>(rem.size()) - 1 - db;
            for (long j = 0; j <= db; ++j)
                rem[static_cast<size_t>(shift + j)] -= f * b.coeffs[static_cast<size_t>(j)];
            rem.pop_back();
        }
        a = b;
        b = PolyQ(std::move(rem));
    }
    if (!a.is_zero()) {
        Rat lead = a.coeffs.back();
        for (auto& c : a.coeffs) c /= lead;
    }
    return a;
}

// ---------------------------------------------------------------------------
// IntPoly: univariate polynomial over Z, coefficients ascending.
// ---------------------------------------------------------------------------
struct IntPoly {
    std::vector<Int> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    const Int& coeff(size_t i) const {
        static const Int zero;
        return i < coeffs.size() ? coeffs[i] : zero;
    }

    PolyQ to_polyq() const {
        std::vector<Rat> c;
        c.reserve(coeffs.size());
        for (const auto& x : coeffs) c.emplace_back(x);
        return PolyQ(std::move(c));
    }

    bool operator==(const IntPoly& o) const { return coeffs == o.coeffs; }
};

inline Int poly_eval(const IntPoly& p, const Int& x) {
    Int acc;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline Fixed poly_eval(const IntPoly& p, const Fixed& x) {
    Fixed acc(Int(0), x.scale);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = fixed_mul(acc, x, x.scale);
        acc.mantissa += *it * pow10(x.scale);
    }
    return acc;
}

// Max |coefficient| (the height H(P)).
inline Int poly_height(const IntPoly& p) {
    Int h;
    for (const auto& c : p.coeffs) {
        Int a = ::abs(c);
        if (a > h) h = a;
    }
    return h;
}

struct PrimitiveResult {
    Int content;      // positive
    IntPoly primitive; // content 1, sign-canonical
};

// Splits P into content * primitive. The sign is fixed so the leading
// coefficient is positive.
inline PrimitiveResult primitive_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("primitive_part: zero polynomial");
    Int g;
    for (const auto& c : p.coeffs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    std::vector<Int> out;
    out.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) out.push_back(c / g);
    if (out.back() < 0)
        for (auto& x : out) x = -x;
    return {g, IntPoly(std::move(out))};
}

// Clears denominators and contents of a rational poly; same sign convention.
inline IntPoly to_primitive_int(const PolyQ& p) {
    if (p.is_zero()) return IntPoly();
    Int l(1);
    for (const auto& c : p.coeffs)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> v;
    v.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) {
        Rat s = c * Rat(l);
        v.push_back(s.get_num());
    }
    return primitive_part(IntPoly(std::move(v))).primitive;
}

}  // namespace gfguess
