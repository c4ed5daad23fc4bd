#include "heptalift/density.hpp"

#include "heptalift/ratfun.hpp"
#include "heptalift/series.hpp"

namespace heptalift
{

namespace
{

Rational one_minus_inv_power(unsigned long p, unsigned long e)
{
    return 1 - Rational(Integer(1), integer_pow(p, e));
}

Rational p_power(unsigned long p, long e)
{
    return rational_pow(Rational(static_cast<long>(p)), e);
}

} // namespace

DensityConstants density_constants(unsigned long p)
{
    auto f = [p](unsigned long e) { return one_minus_inv_power(p, e); };
    DensityConstants d;
    d.p = p;
    d.c1 = f(2) * f(6) * f(8) * f(12);
    d.c2 = f(2) * f(4) * f(6) * f(8);
    d.c3 = f(2) * f(4) * f(4) * f(6);
    d.delta = f(2) * f(5) * f(6) * f(8) * f(9) * f(12);
    return d;
}

Rational beta_p(const ElemDivisors& d)
{
    auto k = density_constants(d.p);
    const int a1 = d.a1, a2 = d.a2, a3 = d.a3;
    if (a1 > a2 || a2 > a3 || a1 < 0)
        throw std::invalid_argument("divisors must satisfy 0 <= a1 <= a2 <= a3");
    if (a1 == a3)
        return p_power(d.p, 27 * a1) * k.c1;
    if (a1 == a2)
        return p_power(d.p, 26 * a1 + a3) * k.c2;
    if (a2 == a3)
        return p_power(d.p, 17 * a1 + 10 * a3) * k.c2;
    return p_power(d.p, 17 * a1 + 9 * a2 + a3) * k.c3;
}

Rational alpha_p(const ElemDivisors& d)
{
    return p_power(d.p, 9 * d.sum()) * density_constants(d.p).delta / beta_p(d);
}

IgusaReport igusa_verify(unsigned long p, int M)
{
    if (M < 1)
        throw std::invalid_argument("truncation order must be >= 1");
    auto k = density_constants(p);
    std::vector<LaurentQ> den;
    for (long e : {1, 5, 9})
        den.push_back(one_minus(p_power(p, -e), 1, Var::u));
    auto closed = ratfun_expand(LaurentQ(Var::u, 1 / k.c1), den, M);

    IgusaReport rep;
    for (int m = 0; m <= M; ++m)
    {
        Rational lhs = 0;
        for (int a1 = 0; 3 * a1 <= m; ++a1)
            for (int a2 = a1; a1 + 2 * a2 <= m; ++a2)
                lhs += 1 / beta_p({p, a1, a2, m - a1 - a2});
        rep.coefficients.emplace_back(lhs, closed[m]);
        if (lhs != closed[m] && rep.ok)
        {
            rep.ok = false;
            rep.first_mismatch = m;
        }
    }
    return rep;
}

std::pair<Integer, Integer> group_orders(unsigned long p, int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    auto f = [p](unsigned long e) { return Integer(integer_pow(p, e) - 1); };
    Integer mprime = integer_pow(p, 36) * f(12) * f(9) * f(8) * f(6) * f(5) * f(2);
    Integer m = mprime * f(1);
    unsigned long k = static_cast<unsigned long>(n - 1);
    return {m * integer_pow(p, 79 * k), mprime * integer_pow(p, 78 * k)};
}

Rational mass_constant()
{
    return Rational(Integer(691), Integer(32768) * 729 * 25 * 49 * 13);
}

SpecialValue constant_c()
{
    Rational q(factorial(5) * factorial(7) * factorial(11), integer_pow(2, 28));
    q.canonicalize();
    return SpecialValue(q) * SpecialValue::pi_half_power(-56);
}

Rational mass(const JordanElement<Integer>& T)
{
    if (!is_positive(T))
        throw std::invalid_argument("mass requires a positive definite element");
    Integer d = det(T);
    Rational r = mass_constant();
    Integer d9;
    mpz_pow_ui(d9.get_mpz_t(), d.get_mpz_t(), 9);
    r *= d9;
    for (const auto& [p, ed] : genus_invariants(T))
        r *= density_constants(p).c1 / beta_p(ed);
    return r;
}

} // namespace heptalift
