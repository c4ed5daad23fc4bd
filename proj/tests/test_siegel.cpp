#include <doctest.h>

#include "heptalift/siegel.hpp"

using namespace heptalift;

namespace
{

LaurentQ poly(std::initializer_list<long> cs, int shift = 0)
{
    LaurentQ r(Var::X);
    int e = shift;
    for (long c : cs)
        r.set(e++, Rational(c));
    return r;
}

template <class F>
void for_range(int bound, F f)
{
    for (int m1 = 0; 3 * m1 <= bound; ++m1)
        for (int m3 = 0; 3 * m1 + m3 <= bound; ++m3)
            for (int m2 = 0; m2 <= m3 && 3 * m1 + m2 + m3 <= bound; ++m2)
                f(m1, m2, m3);
}

} // namespace

TEST_CASE("f_poly examples")
{
    for (unsigned long p : {2ul, 3ul})
    {
        CHECK(f_poly(p, 0, 0, 0).poly == poly({1}));
        CHECK(f_poly(p, 0, 0, 1).poly == poly({1, 1}));
        CHECK(f_poly(p, 0, 0, 2).poly == poly({1, 1, 1}));
        CHECK(f_poly_oracle(p, 0, 0, 2).poly == poly({1, 1, 1}));
    }
    // (0,1,1) at p = 2: 1 + X + 16 X... base sum = (1 + X + X^2) + 16 X
    CHECK(f_poly(2, 0, 1, 1).poly == poly({1, 17, 1}));
    CHECK_THROWS(f_poly(2, 0, 2, 1));
}

TEST_CASE("closed form agrees with the recursion")
{
    for (unsigned long p : {2ul, 3ul, 5ul})
        for_range(9, [&](int m1, int m2, int m3) {
            auto s = f_poly(p, m1, m2, m3);
            CHECK(s.poly == f_poly_oracle(p, m1, m2, m3).poly);
            CHECK(s.poly.coeff(0) == 1);
            CHECK(s.poly.max_exponent() == s.degree());
            CHECK(s.poly.min_exponent() == 0);
            for (const auto& [e, c] : s.poly.terms())
                CHECK(c.get_den() == 1);
        });
}

TEST_CASE("variants of the recursion coefficient fail")
{
    // the X^m1 power beside C1(X^-1) fails once m1 > 0
    detail::KarelReading r;
    r.c1_inv_power_m1 = true;
    bool differs = false;
    for (int m1 = 1; m1 <= 2; ++m1)
    {
        try
        {
            differs |= !(detail::karel_recursion(2, m1, 0, 1, r) == f_poly(2, m1, 0, 1).poly);
        }
        catch (const ArithmeticError&)
        {
            differs = true;
        }
    }
    CHECK(differs);
    // (1 - p^4 X) in the denominator of C1 fails
    detail::KarelReading q;
    q.c1_den_plus4 = true;
    bool differs2 = false;
    try
    {
        differs2 = !(detail::karel_recursion(2, 0, 0, 1, q) == f_poly(2, 0, 0, 1).poly);
    }
    catch (const ArithmeticError&)
    {
        differs2 = true;
    }
    CHECK(differs2);
}

TEST_CASE("tilde f and the functional equation")
{
    CHECK(tilde_f(f_poly(2, 0, 0, 0)) == poly({1}));
    CHECK(tilde_f(f_poly(2, 0, 0, 1)) == poly({1, 0, 1}, -1));
    CHECK(tilde_f(f_poly(2, 0, 0, 2)) == poly({1, 0, 1, 0, 1}, -2));
    for (unsigned long p : {2ul, 3ul, 5ul})
        for_range(9, [&](int m1, int m2, int m3) {
            auto s = f_poly(p, m1, m2, m3);
            LaurentQ t = tilde_f(s);
            CHECK(t == t.substitute_power(-1));
            CHECK(t == tilde_f_alt(s));
            auto c = symmetric_coefficients(t, s.degree());
            CHECK(from_symmetric_coefficients(c) == t);
        });
}

TEST_CASE("symmetric coefficients")
{
    auto c = symmetric_coefficients(poly({1, 0, 1}, -1), 1);
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == 1);
    CHECK(c[0].second == 1);
    auto d = symmetric_coefficients(poly({1, 0, 1, 0, 1}, -2), 2);
    REQUIRE(d.size() == 2);
    CHECK(d[0].second == 1);
    CHECK(d[1].first == 0);
    CHECK(d[1].second == 1);
    CHECK_THROWS(symmetric_coefficients(poly({1, 2}), 1));
    CHECK_THROWS(symmetric_coefficients(poly({1, 0, 1}, -1), 2));
}
