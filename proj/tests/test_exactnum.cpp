#include <doctest.h>

#include <random>

#include "heptalift/ratfun.hpp"
#include "heptalift/reconstruct.hpp"
#include "heptalift/series.hpp"
#include "heptalift/special_value.hpp"

using namespace heptalift;

namespace
{

LaurentQ tpoly(std::initializer_list<long> cs)
{
    LaurentQ p(Var::t);
    int e = 0;
    for (long c : cs)
        p.set(e++, Rational(c));
    return p;
}

LaurentQ random_poly(std::mt19937& rng, Var v, int lo, int hi)
{
    std::uniform_int_distribution<int> d(-5, 5);
    LaurentQ p(v);
    for (int e = lo; e <= hi; ++e)
    {
        Rational c(d(rng), 1 + (d(rng) + 5) % 3);
        c.canonicalize();
        p.set(e, c);
    }
    return p;
}

} // namespace

TEST_CASE("rational parsing and formatting")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-0.125")) == "-1/8");
    CHECK(to_string(parse_rational("7")) == "7/1");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1.2.3"));
}

TEST_CASE("ZMod arithmetic")
{
    ZMod a(5, 7), b(4, 7);
    CHECK((a * b).value() == 6);
    CHECK((a - b - ZMod(2)).value() == 6);
    CHECK((a.inverse() * a).value() == 1);
    CHECK_THROWS_AS(ZMod(2, 8).inverse(), ArithmeticError);
    CHECK_THROWS_AS(a + ZMod(1, 5), std::invalid_argument);
    CHECK(half(ZMod(3, 7)).value() == 5);
    CHECK_THROWS_AS(half(Integer(3)), ArithmeticError);
}

TEST_CASE("ratfun_expand examples")
{
    auto s = ratfun_expand(tpoly({1}), {tpoly({1, -1})}, 3);
    CHECK(s == TruncSeries<Rational>::from_poly(tpoly({1, 1, 1, 1}), 3));

    s = ratfun_expand(tpoly({1}), {tpoly({1, -1}), tpoly({1, -2})}, 2);
    CHECK(s == TruncSeries<Rational>::from_poly(tpoly({1, 3, 7}), 2));

    s = ratfun_expand(tpoly({1, 1}), {tpoly({1, -1})}, 2);
    CHECK(s == TruncSeries<Rational>::from_poly(tpoly({1, 2, 2}), 2));

    CHECK_THROWS_WITH(ratfun_expand(tpoly({1}), {tpoly({0, 1})}, 2), "not a unit series");
}

TEST_CASE("ratfun_expand with Laurent coefficients")
{
    using LX = LaurentQ;
    using LT = LaurentPoly<LX>;
    // 1 / (1 - X t) = sum X^n t^n
    LT num(Var::t, LX(Var::X, Rational(1)));
    LT den(Var::t, LX(Var::X, Rational(1)));
    den.set(1, LX::monomial(Var::X, Rational(-1), 1));
    auto s = ratfun_expand(num, {den}, 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(s[n] == LX::monomial(Var::X, Rational(1), n));
}

TEST_CASE("series and Laurent ring laws")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial)
    {
        auto a = random_poly(rng, Var::X, -3, 3);
        auto b = random_poly(rng, Var::X, -2, 4);
        auto c = random_poly(rng, Var::X, 0, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);

        int M = 6;
        auto sa = TruncSeries<Rational>::from_poly(random_poly(rng, Var::t, 0, 8), M);
        auto sb = TruncSeries<Rational>::from_poly(random_poly(rng, Var::t, 0, 8), M);
        auto sc = TruncSeries<Rational>::from_poly(random_poly(rng, Var::t, 0, 8), M);
        CHECK((sa * sb) * sc == sa * (sb * sc));
        CHECK(sa * (sb + sc) == sa * sb + sa * sc);

        // expansion times denominators gives back the numerator
        auto f = random_poly(rng, Var::t, 0, 3);
        std::vector<LaurentQ> gs;
        for (int i = 0; i < 3; ++i)
        {
            auto g = random_poly(rng, Var::t, 1, 3);
            g.set(0, Rational(1 + i) / 2);
            gs.push_back(g);
        }
        auto e = ratfun_expand(f, gs, M);
        for (const auto& g : gs)
            e = e * TruncSeries<Rational>::from_poly(g, M);
        CHECK(e == TruncSeries<Rational>::from_poly(f, M));
    }
}

TEST_CASE("truncation order propagates as a minimum")
{
    auto a = TruncSeries<Rational>::from_poly(tpoly({1, 1, 1, 1, 1}), 4);
    auto b = TruncSeries<Rational>::from_poly(tpoly({1, 1}), 2);
    CHECK((a * b).order() == 2);
    CHECK((a + b).order() == 2);
}

TEST_CASE("exact polynomial division")
{
    LaurentQ x1 = one_minus(Rational(1), 1);
    LaurentQ x2 = one_minus(Rational(16), 1);
    LaurentQ prod = x1 * x2 * LaurentQ::monomial(Var::X, Rational(3), -2);
    CHECK(divide_exact(prod, x2) == x1 * LaurentQ::monomial(Var::X, Rational(3), -2));
    CHECK_THROWS_AS(divide_exact(prod + LaurentQ(Var::X, Rational(1)), x2), ArithmeticError);

    RatFun r(LaurentQ(Var::X, Rational(1)), x1);
    RatFun s = r + r.inverted_variable();
    // 1/(1-X) + 1/(1-1/X) = 1
    CHECK(s.to_laurent() == LaurentQ(Var::X, Rational(1)));
}

TEST_CASE("special values")
{
    SpecialValue z2 = SpecialValue::zeta(2), z6 = SpecialValue::zeta(6);
    CHECK(z2 == SpecialValue(Rational(1, 6)) * SpecialValue::pi_half_power(4));
    CHECK(z6 == SpecialValue(Rational(1, 945)) * SpecialValue::pi_half_power(12));
    CHECK(z2 * z6 == SpecialValue(Rational(1, 2 * 81 * 5 * 7)) * SpecialValue::pi_half_power(16));

    SpecialValue z5 = SpecialValue::zeta(5);
    CHECK(z5 * z5.pow(-1) == SpecialValue(Rational(1)));
    CHECK(SpecialValue() + z5 == z5);
    CHECK_THROWS_WITH(z5 / (z5 + z2), "non-monomial divisor");

    SpecialValue a = z5 + SpecialValue::symsq(1) * SpecialValue(Rational(3));
    SpecialValue b = z2 + SpecialValue::zeta(9);
    CHECK((a * b).to_json().dump() == (b * a).to_json().dump());

    CHECK(SpecialValue::gamma_half(5) == SpecialValue(Rational(3, 4)) * SpecialValue::pi_half_power(1));
    CHECK(SpecialValue::gamma_half(9) == SpecialValue(Rational(105, 16)) * SpecialValue::pi_half_power(1));
    CHECK(SpecialValue::gamma_half(8) == SpecialValue(Rational(6)));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("rational reconstruction")
{
    Rational eps(Integer(1), Integer("10000000000"));
    CHECK(rational_reconstruct("0.333333333333", eps, Integer(1000000)) == Rational(1, 3));
    CHECK(rational_reconstruct("0.142857142857", eps, Integer(1000000)) == Rational(1, 7));
    CHECK_FALSE(rational_reconstruct("0.141592653589", eps, Integer(1000)).has_value());
    CHECK(rational_reconstruct("-2.5", eps, Integer(10)) == Rational(-5, 2));
}
