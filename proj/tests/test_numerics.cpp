#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gfguess/numerics.hpp"

using namespace gfguess;

TEST_CASE("rat_to_fixed basic values") {
    Fixed f = rat_to_fixed(Rat(1, 3), 5);
    CHECK(f.mantissa == 33333);
    CHECK(f.scale == 5);

    Fixed g = rat_to_fixed(Rat(2), 4);
    CHECK(g.mantissa == 20000);
    CHECK(g.scale == 4);
}

TEST_CASE("rat_to_fixed matches long division") {
    // digits of 10/9 to 10 places via explicit long division, plus a
    // final-rounding check (the digit after is 1, so we round down)
    Int num(10), den(9);
    Int q = num / den;  // integer part: 1
    Int rem = num % den;
    std::string digits = q.get_str();
    for (int i = 0; i < 10; ++i) {
        rem *= 10;
        digits += Int(rem / den).get_str();
        rem %= den;
    }
    CHECK(digits == "11111111111");
    Fixed f = rat_to_fixed(Rat(10, 9), 10);
    CHECK(f.mantissa == Int("11111111111"));
    CHECK(f.scale == 10);
}

TEST_CASE("rat_to_fixed rounds half to even") {
    CHECK(rat_to_fixed(Rat(1, 2), 0).mantissa == 0);   // 0.5 -> 0
    CHECK(rat_to_fixed(Rat(3, 2), 0).mantissa == 2);   // 1.5 -> 2
    CHECK(rat_to_fixed(Rat(5, 2), 0).mantissa == 2);   // 2.5 -> 2
    CHECK(rat_to_fixed(Rat(-1, 2), 0).mantissa == 0);
    CHECK(rat_to_fixed(Rat(-3, 2), 0).mantissa == -2);
    CHECK(rat_to_fixed(Rat(25, 100), 1).mantissa == 2);
    CHECK(rat_to_fixed(Rat(35, 100), 1).mantissa == 4);
}

TEST_CASE("rat_to_fixed round trip error bound") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int t = 0; t < 200; ++t) {
        Rat r = make_rat(num(rng), den(rng));
        for (long p : {0L, 3L, 10L}) {
            Fixed f = rat_to_fixed(r, p);
            Rat err = ::abs(f.to_rational() - r);
            CHECK(err * 2 * Rat(pow10(p)) <= 1);
        }
    }
}

TEST_CASE("fixed_pow examples") {
    Fixed x(Int(15000), 4);  // 1.5
    Fixed sq = fixed_pow(x, 2, 4);
    CHECK(sq.mantissa == 22500);
    CHECK(sq.scale == 4);

    Fixed one = fixed_pow(x, 0, 6);
    CHECK(one.mantissa == 1000000);
    CHECK(one.scale == 6);
}

TEST_CASE("fixed_pow square against exact rational") {
    Fixed x(Int("14142135624"), 10);
    Fixed sq = fixed_pow(x, 2, 10);
    Rat exact = x.to_rational() * x.to_rational();
    Int expect = rat_to_fixed(exact, 10).mantissa;
    CHECK(::abs(sq.mantissa - expect) <= 1);  // within 1 ulp
}

TEST_CASE("fixed_pow error bound for |x| <= 2") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> mant(-20000, 20000);
    const long p = 12;
    for (int t = 0; t < 100; ++t) {
        Fixed x(Int(mant(rng)), 4);  // |x| <= 2
        for (unsigned long k : {1ul, 3ul, 7ul, 12ul}) {
            Fixed got = fixed_pow(x, k, p);
            Rat exact(1);
            for (unsigned long i = 0; i < k; ++i) exact *= x.to_rational();
            Rat err = ::abs(got.to_rational() - exact);
            // each of the k-1 rounded multiplications contributes up to half an
            // ulp, amplified by the remaining factors (|x| <= 2)
            Rat bound = Rat(static_cast<long>(k)) *
                        Rat(pow_int(Int(2), k)) / Rat(pow10(p));
            CHECK(err <= bound);
        }
    }
}

TEST_CASE("fixed string rendering and parsing") {
    CHECK(Fixed(Int(10101), 4).to_string() == "1.0101");
    CHECK(Fixed(Int(-25), 2).to_string() == "-0.25");
    CHECK(Fixed(Int(7), 0).to_string() == "7");
    Fixed parsed = fixed_from_string("1.0101");
    CHECK(parsed.mantissa == 10101);
    CHECK(parsed.scale == 4);
}

TEST_CASE("poly_eval over Q") {
    PolyQ p(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});  // n^2 - 1
    CHECK(poly_eval(p, Rat(3)) == 8);
    CHECK(poly_eval(PolyQ(), Rat(17)) == 0);

    PolyQ big(std::vector<Rat>{Rat(4), Rat(-20), Rat(41), Rat(-44), Rat(26), Rat(-8), Rat(1)});
    CHECK(poly_eval(big, Rat(100)) == Rat(Int("922556408004")));
}

TEST_CASE("poly_eval agrees with brute force") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<long> denr(1, 5);
    for (int t = 0; t < 100; ++t) {
        std::vector<Rat> c;
        for (int i = 0; i <= 5; ++i) c.push_back(make_rat(coeff(rng), denr(rng)));
        PolyQ p(c);
        Rat x = make_rat(coeff(rng), denr(rng));
        // brute force: accumulate x^i by repeated multiplication and sum
        Rat sum, xp(1);
        for (const auto& ci : c) {
            sum += ci * xp;
            xp *= x;
        }
        CHECK(poly_eval(p, x) == sum);
    }
}

TEST_CASE("primitive_part examples") {
    auto r1 = primitive_part(IntPoly({Int(-4), Int(0), Int(2)}));  // 2x^2 - 4
    CHECK(r1.content == 2);
    CHECK(r1.primitive == IntPoly({Int(-2), Int(0), Int(1)}));

    auto r2 = primitive_part(IntPoly({Int(-2), Int(0), Int(1)}));
    CHECK(r2.content == 1);
    CHECK(r2.primitive == IntPoly({Int(-2), Int(0), Int(1)}));

    // -3x + 6: sign flipped so the leading coefficient is positive
    auto r3 = primitive_part(IntPoly({Int(6), Int(-3)}));
    CHECK(r3.content == 3);
    CHECK(r3.primitive == IntPoly({Int(-2), Int(1)}));

    CHECK_THROWS_AS(primitive_part(IntPoly()), std::invalid_argument);
}

TEST_CASE("primitive_part scaling invariance") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<long> scale(1, 20);
    for (int t = 0; t < 200; ++t) {
        std::vector<Int> c;
        for (int i = 0; i < 5; ++i) c.emplace_back(coeff(rng));
        IntPoly p(c);
        if (p.is_zero()) continue;
        long s = scale(rng);
        if (t % 2) s = -s;
        std::vector<Int> cs;
        for (const auto& x : p.coeffs) cs.push_back(x * s);
        CHECK(primitive_part(IntPoly(cs)).primitive == primitive_part(p).primitive);
    }
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
    std::uniform_int_distribution<long> den(1, 1000000000L);
    for (int t = 0; t < 500; ++t) {
        Rat a = make_rat(num(rng), den(rng));
        Rat b = make_rat(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (b != 0) CHECK((a * b) / b == a);
    }
}

TEST_CASE("polynomial helpers") {
    PolyQ a(std::vector<Rat>{Rat(1), Rat(1)});   // 1 + x
    PolyQ b(std::vector<Rat>{Rat(1), Rat(-1)});  // 1 - x
    CHECK(poly_mul(a, b) == PolyQ(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)}));
    CHECK(poly_divexact(poly_mul(a, b), b) == a);
    CHECK_THROWS(poly_divexact(a, PolyQ(std::vector<Rat>{Rat(1), Rat(0), Rat(1)})));

    // gcd of (x-1)(x+2) and (x-1)(x-3) is monic x-1
    PolyQ f = poly_mul(PolyQ(std::vector<Rat>{Rat(-1), Rat(1)}),
                       PolyQ(std::vector<Rat>{Rat(2), Rat(1)}));
    PolyQ g = poly_mul(PolyQ(std::vector<Rat>{Rat(-1), Rat(1)}),
                       PolyQ(std::vector<Rat>{Rat(-3), Rat(1)}));
    CHECK(poly_gcd(f, g) == PolyQ(std::vector<Rat>{Rat(-1), Rat(1)}));

    // shift: (x+1)^2 = x^2 + 2x + 1
    PolyQ sq(std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    CHECK(poly_compose_shift(sq, Rat(1)) == PolyQ(std::vector<Rat>{Rat(1), Rat(2), Rat(1)}));

    CHECK(poly_derivative(sq) == PolyQ(std::vector<Rat>{Rat(0), Rat(2)}));
}

TEST_CASE("IntPoly evaluation at Fixed values") {
    // x^2 - 2 at 1.41421356 (scale 8): small residual, not zero
    IntPoly p({Int(-2), Int(0), Int(1)});
    Fixed x(Int("141421356"), 8);
    Fixed r = poly_eval(p, x);
    CHECK(r.scale == 8);
    CHECK(::abs(r.mantissa) < 10);  // |x^2-2| ~ 7e-9 at this precision
    CHECK(poly_eval(p, Fixed(Int(200000000), 8)).to_string() == "2.00000000");
}
