#include "heptalift/siegel.hpp"

#include <algorithm>
#include <stdexcept>

#include "heptalift/ratfun.hpp"

namespace heptalift
{

namespace
{

const char* const kTranscription = "Siegel series closed form does not reduce to a polynomial";

void check_indices(int m1, int m2, int m3)
{
    if (m1 < 0 || m2 < 0 || m2 > m3)
        throw std::invalid_argument("need 0 <= m1 and 0 <= m2 <= m3");
}

Rational pw(unsigned long p, long e)
{
    return rational_pow(Rational(static_cast<long>(p)), e);
}

LaurentQ mono(const Rational& c, int e)
{
    return LaurentQ::monomial(Var::X, c, e);
}

// c X^e / prod (1 - c_i X^{s_i}), s_i = +-1
struct Term
{
    Rational coeff;
    int exp;
    std::vector<std::pair<Rational, int>> factors;
};

void check_polynomial(const LaurentQ& f)
{
    if (!f.is_zero() && f.min_exponent() < 0)
        throw ArithmeticError(kTranscription);
    for (const auto& [e, c] : f.terms())
        if (c.get_den() != 1)
            throw ArithmeticError("Siegel series has a non-integral coefficient");
}

// 1 + X + ... + X^(n-1)
LaurentQ geometric(int n)
{
    LaurentQ r(Var::X);
    for (int i = 0; i < n; ++i)
        r.set(i, Rational(1));
    return r;
}

// sum_{k=0}^{m2} (p^4 X)^k (1 - X^{m2+m3+1-2k}) / (1 - X)
LaurentQ base_sum(unsigned long p, int m2, int m3)
{
    LaurentQ r(Var::X);
    if (m2 < 0)
        return r;
    for (int k = 0; k <= m2; ++k)
        r += geometric(m2 + m3 + 1 - 2 * k).shifted(k).scaled(pw(p, 4L * k));
    return r;
}

} // namespace

SiegelPoly f_poly(unsigned long p, int m1, int m2, int m3)
{
    check_indices(m1, m2, m3);
    const Rational one(1), P4 = pw(p, 4), P8 = pw(p, 8), Pm4 = pw(p, -4);
    const int m = 3 * m1 + m2 + m3;
    const Rational k8 = pw(p, 8L * m1 + 8), k4a = pw(p, 8L * m1 + 4L * (m2 + 1)), k4b = pw(p, 8L * m1 + 4L * m2);

    std::vector<Term> terms = {
        {one, 0, {{one, 1}, {P4, 1}, {P8, 1}}},
        {one, m, {{one, -1}, {P4, -1}, {P8, -1}}},
        {-k8, m1 + 1, {{one, 1}, {P4, 1}, {P8, 1}}},
        {-k8, 2 * m1 + m2 + m3 - 1, {{one, -1}, {P4, -1}, {P8, -1}}},
        {-k4a, m1 + m2 + 1, {{one, 1}, {one, 1}, {P4, 1}}},
        {-k4a, 2 * m1 + m3 - 1, {{one, -1}, {one, -1}, {P4, -1}}},
        {-k4b, m1 + m3 + 1, {{one, 1}, {one, 1}, {Pm4, 1}}},
        {-k4b, 2 * m1 + m2 - 1, {{one, -1}, {one, -1}, {Pm4, -1}}},
    };

    // 1/(1 - c X^-1) = -c^-1 X / (1 - c^-1 X); afterwards every factor is
    // 1 - c X with c among the roots of the common denominator below.
    std::vector<std::pair<Rational, int>> common = {{one, 2}, {P4, 1}, {P8, 1}, {Pm4, 1}, {pw(p, -8), 1}};
    LaurentQ D(Var::X, one);
    for (const auto& [c, mult] : common)
        D *= one_minus(c, 1).pow(static_cast<unsigned>(mult));

    LaurentQ numer(Var::X);
    for (auto t : terms)
    {
        std::vector<std::pair<Rational, int>> have;
        for (auto [c, s] : t.factors)
        {
            if (s < 0)
            {
                t.coeff *= -1 / c;
                t.exp += 1;
                c = 1 / c;
            }
            bool merged = false;
            for (auto& h : have)
                if (h.first == c)
                {
                    ++h.second;
                    merged = true;
                }
            if (!merged)
                have.emplace_back(c, 1);
        }
        LaurentQ cof = mono(t.coeff, t.exp);
        for (const auto& [c, mult] : common)
        {
            int used = 0;
            for (const auto& h : have)
                if (h.first == c)
                    used = h.second;
            if (used > mult)
                throw ArithmeticError(kTranscription);
            cof *= one_minus(c, 1).pow(static_cast<unsigned>(mult - used));
        }
        numer += cof;
    }
    SiegelPoly s{p, m1, m2, m3, divide_exact(numer, D, kTranscription)};
    check_polynomial(s.poly);
    return s;
}

namespace detail
{

LaurentQ karel_recursion(unsigned long p, int m1, int m2, int m3, KarelReading r)
{
    check_indices(m1, m2, m3);
    const Rational one(1);
    LaurentQ f0 = base_sum(p, m2, m3);
    // f at p^-1 T0 vanishes when m2 = 0
    LaurentQ fm = m2 == 0 ? LaurentQ(Var::X) : base_sum(p, m2 - 1, m3 - 1);

    auto c0 = [&](bool inv) {
        RatFun x(LaurentQ(Var::X, one),
                 one_minus(one, 1) * one_minus(pw(p, 4), 1) * one_minus(pw(p, 8), 1) * f0);
        return inv ? x.inverted_variable() : x;
    };
    auto c1 = [&](bool inv) {
        RatFun lead(-(LaurentQ(Var::X, one) + mono(1 + pw(p, 4), 1)), one_minus(pw(p, 8), 1));
        RatFun top = lead + RatFun(f0) - RatFun(fm.shifted(2));
        Rational c = r.c1_den_plus4 ? pw(p, 4) : pw(p, -4);
        RatFun x = top / RatFun(one_minus(one, 1) * one_minus(c, 1) * f0);
        return inv ? x.inverted_variable() : x;
    };

    const Rational k = pw(p, 8L * m1);
    RatFun sum = c0(true) * RatFun(mono(one, 3 * m1));
    sum += c1(true) * RatFun(mono(k, r.c1_inv_power_m1 ? m1 : 2 * m1));
    sum += c1(false) * RatFun(mono(k, m1));
    sum += c0(false);
    return (RatFun(f0) * sum).to_laurent(kTranscription);
}

} // namespace detail

SiegelPoly f_poly_oracle(unsigned long p, int m1, int m2, int m3)
{
    SiegelPoly s{p, m1, m2, m3, detail::karel_recursion(p, m1, m2, m3, {})};
    check_polynomial(s.poly);
    return s;
}

SiegelPoly f_poly_for_divisors(unsigned long p, int a1, int a2, int a3)
{
    int v[3] = {a1, a2, a3};
    std::sort(v, v + 3);
    return f_poly(p, v[0], v[1] - v[0], v[2] - v[0]);
}

LaurentQ tilde_f(const SiegelPoly& s)
{
    return s.poly.substitute_power(-2).shifted(s.degree());
}

LaurentQ tilde_f_alt(const SiegelPoly& s)
{
    return s.poly.substitute_power(2).shifted(-s.degree());
}

std::vector<std::pair<int, Integer>> symmetric_coefficients(const LaurentQ& t, int m)
{
    if (!(t == t.substitute_power(-1)))
        throw std::invalid_argument("Laurent polynomial is not palindromic");
    std::vector<std::pair<int, Integer>> out;
    for (const auto& [e, c] : t.terms())
    {
        if (((e - m) % 2) != 0)
            throw std::invalid_argument("support parity differs from m");
        if (c.get_den() != 1)
            throw std::invalid_argument("non-integral coefficient");
    }
    for (int j = m; j >= 0; j -= 2)
        out.emplace_back(j, t.coeff(j).get_num());
    return out;
}

LaurentQ from_symmetric_coefficients(const std::vector<std::pair<int, Integer>>& c)
{
    LaurentQ r(Var::X);
    for (const auto& [j, v] : c)
    {
        Rational q(v);
        r.add_to(j, q);
        if (j != 0)
            r.add_to(-j, q);
    }
    return r;
}

} // namespace heptalift
