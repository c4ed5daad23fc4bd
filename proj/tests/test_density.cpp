#include <doctest.h>

#include "heptalift/density.hpp"

using namespace heptalift;
using JZ = JordanElement<Integer>;

TEST_CASE("constants")
{
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
    {
        auto k = density_constants(p);
        for (const Rational* v : {&k.c1, &k.c2, &k.c3, &k.delta})
        {
            CHECK(*v > 0);
            CHECK(*v < 1);
        }
        Rational p5(Integer(1), integer_pow(p, 5)), p9(Integer(1), integer_pow(p, 9));
        CHECK(k.delta / k.c1 == (1 - p5) * (1 - p9));
    }
}

TEST_CASE("beta and alpha examples")
{
    for (unsigned long p : {2ul, 3ul, 5ul})
    {
        auto k = density_constants(p);
        Rational P(static_cast<long>(p));
        CHECK(beta_p({p, 0, 0, 0}) == k.c1);
        CHECK(beta_p({p, 0, 0, 1}) == P * k.c2);
        CHECK(beta_p({p, 0, 1, 2}) == rational_pow(P, 11) * k.c3);
        CHECK(alpha_p({p, 0, 0, 0}) == k.delta / k.c1);
        CHECK(alpha_p({p, 0, 0, 1}) == rational_pow(P, 9) * k.delta / (P * k.c2));
        CHECK(alpha_p({p, 1, 1, 1}) == k.delta / k.c1);
    }
}

TEST_CASE("beta recursions")
{
    for (unsigned long p : {2ul, 3ul, 5ul})
    {
        Rational P(static_cast<long>(p));
        for (int a3 = 0; a3 <= 6; ++a3)
            for (int a2 = 0; a2 <= a3; ++a2)
                for (int a1 = 0; a1 <= a2; ++a1)
                {
                    ElemDivisors d{p, a1, a2, a3};
                    CHECK(beta_p({p, a1 + 1, a2 + 1, a3 + 1}) == rational_pow(P, 27) * beta_p(d));
                    CHECK(beta_p(make_divisors(p, a2 + a3, a1 + a3, a1 + a2)) ==
                          rational_pow(P, 9 * d.sum()) * beta_p(d));
                    if (a1 == 0 && 0 < a2 && a2 < a3)
                        CHECK(beta_p({p, a1, a2, a3 + 1}) == P * beta_p(d));
                }
    }
}

TEST_CASE("Igusa series")
{
    for (unsigned long p : {2ul, 3ul, 5ul})
    {
        auto rep = igusa_verify(p, 12);
        CHECK(rep.ok);
        auto k = density_constants(p);
        CHECK(rep.coefficients[0].second == 1 / k.c1);
        Rational P(static_cast<long>(p));
        CHECK(rep.coefficients[1].second == 1 / (P * k.c2));
    }
}

TEST_CASE("group orders")
{
    auto [m1, mp1] = group_orders(2, 1);
    CHECK(m1 == mp1);
    Integer expect = integer_pow(2, 36) * 4095 * 511 * 255 * 63 * 31 * 3;
    CHECK(m1 == expect);
    auto [m2, mp2] = group_orders(2, 2);
    CHECK(m2 == m1 * integer_pow(2, 79));
    CHECK(mp2 == mp1 * integer_pow(2, 78));
    auto [m3, mp3] = group_orders(3, 1);
    CHECK(m3 == 2 * mp3);
}

TEST_CASE("mass")
{
    Rational K(Integer(691), Integer(32768) * 729 * 25 * 49 * 13);
    CHECK(mass(JZ::identity()) == K);
    auto k = density_constants(2);
    CHECK(mass(JZ::diag(1, 1, 2)) == K * 512 * k.c1 / (2 * k.c2));
    CHECK(mass(JZ::identity().scaled(Integer(2))) == K);
    CHECK(mass(JZ::identity().scaled(Integer(3))) == K);
    JZ T = JZ::diag(2, 2, 1);
    T.x = Octonion<Integer>::e(1);
    CHECK(mass(T.scaled(Integer(2))) == mass(T));
    CHECK(mass(T.scaled(Integer(3))) == mass(T));
    CHECK_THROWS(mass(JZ::diag(1, 1, -1)));

    // c zeta(2) zeta(6) zeta(8) zeta(12) is rational
    SpecialValue prod = constant_c();
    for (int n : {2, 6, 8, 12})
        prod *= SpecialValue::zeta(n);
    CHECK(prod == SpecialValue(K));
}
