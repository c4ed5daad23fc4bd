#include <doctest.h>

#include "heptalift/density.hpp"
#include "heptalift/genfun.hpp"
#include "heptalift/siegel.hpp"

using namespace heptalift;

namespace
{

LaurentQ x_plus_inv_sq()
{
    LaurentQ r(Var::X);
    r.set(-2, Rational(1));
    r.set(0, Rational(2));
    r.set(2, Rational(1));
    return r;
}

Rational inv_pow(unsigned long p, unsigned long e)
{
    return Rational(Integer(1), integer_pow(p, e));
}

} // namespace

TEST_CASE("lambda_p")
{
    for (unsigned long p : {2ul, 3ul})
    {
        auto k = density_constants(p);
        CHECK(lambda_p(p, 0) == LaurentQ(Var::X, 1 / k.c1));
        CHECK(lambda_p(p, 1) == x_plus_inv_sq().scaled(1 / (Rational(static_cast<long>(p)) * k.c2)));
        LaurentQ t002 = tilde_f(f_poly(p, 0, 0, 2)), t011 = tilde_f(f_poly(p, 0, 1, 1));
        CHECK(lambda_p(p, 2) ==
              (t002 * t002).scaled(1 / beta_p({p, 0, 0, 2})) + (t011 * t011).scaled(1 / beta_p({p, 0, 1, 1})));
    }
}

TEST_CASE("P closed form against the defining sum")
{
    for (unsigned long p : {2ul, 3ul})
    {
        auto c = P_closed(p, 6), d = P_direct(p, 6);
        CHECK(c == d);
        CHECK(c[0].at({0, 0, 0}) == 1 / beta_p({p, 0, 0, 0}));
        CHECK(c[1].size() == 1);
        CHECK(c[1].at({0, 0, 1}) == 1 / beta_p({p, 0, 0, 1}));
    }
}

TEST_CASE("eight-term table reproduces tilde f")
{
    for (unsigned long p : {2ul, 3ul})
        for (int m1 = 0; m1 <= 2; ++m1)
            for (int m3 = 0; m3 <= 3; ++m3)
                for (int m2 = 0; m2 <= m3; ++m2)
                    CHECK(tilde_f_from_table(p, m1, m2, m3) == tilde_f(f_poly(p, m1, m2, m3)));
}

TEST_CASE("H_p closed form, low order")
{
    for (unsigned long p : {2ul, 3ul})
    {
        auto k = density_constants(p);
        auto s = hp_closed_series(p, 2);
        CHECK(s[0] == LaurentQ(Var::X, 1 / k.c1));
        Rational q = inv_pow(p, 1) + inv_pow(p, 5) + inv_pow(p, 9);
        CHECK(s[1] == x_plus_inv_sq().scaled(q / k.c1));
        CHECK(s[1] == lambda_p(p, 1));
    }
}

TEST_CASE("hp_verify serial and parallel agree")
{
    auto a = hp_verify(2, 5, Exec::serial);
    auto b = hp_verify(2, 5, Exec::parallel);
    CHECK(a.ok);
    CHECK(b.ok);
    CHECK(a.coefficients == b.coefficients);
    CHECK(hp_verify(3, 4).ok);
}

TEST_CASE("Euler product shape")
{
    for (unsigned long p : {2ul, 3ul, 5ul})
    {
        auto r = rs_euler_check(p);
        CHECK(r.ok);
        CHECK(r.zeta_inverse.size() == 3);
    }
}

TEST_CASE("gamma_RS")
{
    SpecialValue s9 = gamma_RS(Rational(9));
    SpecialValue want = SpecialValue(rational_pow(Rational(2), -54) * Rational(factorial(8) * factorial(4))) *
                        SpecialValue::pi_half_power(-30);
    CHECK(s9 == want);
    SpecialValue s20 = gamma_RS(Rational(20));
    CHECK(s20 == SpecialValue(rational_pow(Rational(2), -120) *
                              Rational(factorial(19) * factorial(15) * factorial(11))) *
                     SpecialValue::pi_half_power(-96));
    // pi^{12-3s} times one sqrt(pi) from each half-integral Gamma value
    CHECK(gamma_RS(Rational(19, 2)).monomial().first.first == 24 - 57 + 3);
    CHECK_THROWS(gamma_RS(Rational(8)));
    CHECK_THROWS(gamma_RS(Rational(28, 3)));
}

TEST_CASE("residue and gamma_k")
{
    SpecialValue r = rs_closed_residue(10);
    const auto& [key, c] = r.monomial();
    for (const char* s : {"symsq1", "symsq5", "symsq9", "zeta5", "zeta9"})
        CHECK(key.second.count(s) == 1);
    CHECK(key.second.size() == 5);

    Rational g10(691 * factorial(19) * factorial(15) * factorial(11),
                 integer_pow(2, 113) * 27 * 5 * 49 * 13);
    g10.canonicalize();
    CHECK(gamma_k(10) == g10);
    Rational K = mass_constant();
    for (int k = 10; k <= 15; ++k)
    {
        CHECK(gamma_k_derived(k) == gamma_k(k));
        unsigned long uk = static_cast<unsigned long>(k);
        Rational alt = K * rational_pow(Rational(2), -12 * k + 22) * 27 * 5 *
                       Rational(factorial(2 * uk - 1) * factorial(2 * uk - 5) * factorial(2 * uk - 9));
        CHECK(alt == gamma_k(k));
    }
}
