#include "heptalift/genfun.hpp"

#include <stdexcept>

#include "heptalift/density.hpp"
#include "heptalift/ratfun.hpp"
#include "heptalift/siegel.hpp"

namespace heptalift
{

namespace
{

Rational pw(unsigned long p, long e)
{
    return rational_pow(Rational(static_cast<long>(p)), e);
}

LaurentQ xmono(const Rational& c, int e)
{
    return LaurentQ::monomial(Var::X, c, e);
}

using TPoly = LaurentPoly<LaurentQ>;

// 1 + c X^ex t^et
TPoly t_binomial(const Rational& c, int ex, int et)
{
    TPoly r(Var::t, LaurentQ(Var::X, Rational(1)));
    r.add_to(et, xmono(c, ex));
    return r;
}

PSeries pmul(const PSeries& a, const PSeries& b, int M)
{
    PSeries r(static_cast<std::size_t>(M) + 1);
    for (int i = 0; i <= M; ++i)
        for (int j = 0; i + j <= M; ++j)
            for (const auto& [ka, ca] : a[static_cast<std::size_t>(i)])
                for (const auto& [kb, cb] : b[static_cast<std::size_t>(j)])
                {
                    std::array<int, 3> k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
                    Rational& slot = r[static_cast<std::size_t>(i + j)][k];
                    slot += ca * cb;
                    if (slot == 0)
                        r[static_cast<std::size_t>(i + j)].erase(k);
                }
    return r;
}

// 1 / (1 - c A^a B^b C^c t^e)
PSeries geometric(const Rational& c, std::array<int, 3> mono, int e, int M)
{
    PSeries r(static_cast<std::size_t>(M) + 1);
    Rational cn = 1;
    for (int n = 0; n * e <= M; ++n)
    {
        r[static_cast<std::size_t>(n * e)][{n * mono[0], n * mono[1], n * mono[2]}] = cn;
        cn *= c;
    }
    return r;
}

std::pair<Rational, int> mono_pow(const std::pair<Rational, int>& m, int n)
{
    return {rational_pow(m.first, n), m.second * n};
}

std::pair<Rational, int> mono_mul(const std::pair<Rational, int>& a, const std::pair<Rational, int>& b)
{
    return {a.first * b.first, a.second + b.second};
}

} // namespace

LaurentQ lambda_p(unsigned long p, int m)
{
    if (m < 0)
        throw std::invalid_argument("m must be >= 0");
    LaurentQ r(Var::X);
    for (int a1 = 0; 3 * a1 <= m; ++a1)
        for (int a2 = a1; a1 + 2 * a2 <= m; ++a2)
        {
            int a3 = m - a1 - a2;
            LaurentQ t = tilde_f(f_poly(p, a1, a2 - a1, a3 - a1));
            r += (t * t).scaled(1 / beta_p({p, a1, a2, a3}));
        }
    return r;
}

PSeries P_closed(unsigned long p, int M)
{
    if (M < 0)
        throw std::invalid_argument("order must be >= 0");
    const Rational c1 = density_constants(p).c1;
    PSeries num(static_cast<std::size_t>(M) + 1);
    num[0][{0, 0, 0}] = 1 / c1;
    if (M >= 1)
        num[1][{0, 0, 1}] = (pw(p, -5) + pw(p, -9)) / c1;
    if (M >= 2)
        num[2][{0, 1, 1}] = (pw(p, -14) + pw(p, -18)) / c1;
    if (M >= 3)
        num[3][{0, 1, 2}] = pw(p, -23) / c1;
    PSeries r = pmul(num, geometric(pw(p, -27), {1, 0, 0}, 3, M), M);
    r = pmul(r, geometric(pw(p, -10), {0, 1, 1}, 2, M), M);
    return pmul(r, geometric(pw(p, -1), {0, 0, 1}, 1, M), M);
}

PSeries P_direct(unsigned long p, int M)
{
    if (M < 0)
        throw std::invalid_argument("order must be >= 0");
    PSeries r(static_cast<std::size_t>(M) + 1);
    for (int m1 = 0; 3 * m1 <= M; ++m1)
        for (int m3 = 0; 3 * m1 + m3 <= M; ++m3)
            for (int m2 = 0; m2 <= m3 && 3 * m1 + m2 + m3 <= M; ++m2)
                r[static_cast<std::size_t>(3 * m1 + m2 + m3)][{m1, m2, m3}] =
                    1 / beta_p({p, m1, m1 + m2, m1 + m3});
    return r;
}

HpClosedForm hp_closed_form(unsigned long p)
{
    HpClosedForm h;
    h.p = p;
    h.prefactor = 1 / density_constants(p).c1;
    h.numerator = {t_binomial(-pw(p, -14), 0, 2), t_binomial(pw(p, -5), 0, 1), t_binomial(pw(p, -9), 0, 1)};
    h.denominator = {t_binomial(-pw(p, -1), 0, 1)};
    for (int i = 1; i <= 3; ++i)
    {
        Rational q = pw(p, 3 - 4 * i);
        h.denominator.push_back(t_binomial(-q, 0, 1));
        h.denominator.push_back(t_binomial(-q, -2, 1));
        h.denominator.push_back(t_binomial(-q, 2, 1));
    }
    return h;
}

TruncSeries<LaurentQ> hp_closed_series(unsigned long p, int M)
{
    HpClosedForm h = hp_closed_form(p);
    TPoly num(Var::t, LaurentQ(Var::X, h.prefactor));
    for (const auto& f : h.numerator)
        num *= f;
    return ratfun_expand(num, h.denominator, M);
}

HpTable hp_table(unsigned long p)
{
    const Rational one(1), P4 = pw(p, 4), P8 = pw(p, 8), Pm4 = pw(p, -4);
    auto f = [](const Rational& c) { return one_minus(c, 2); };
    LaurentQ d = f(one) * f(one) * f(P4) * f(P8) * f(Pm4);
    LaurentQ dbar = d.substitute_power(-1);

    HpTable t;
    t.D = d * dbar;
    t.N[0] = f(one) * f(Pm4) * dbar;
    t.N[1] = t.N[0] * xmono(-P8, 2);
    t.N[2] = xmono(-P4, 2) * f(P8) * f(Pm4) * dbar;
    t.N[3] = xmono(-one, 2) * f(P4) * f(P8) * dbar;
    for (int i = 0; i < 4; ++i)
        t.N[static_cast<std::size_t>(i + 4)] = t.N[static_cast<std::size_t>(i)].substitute_power(-1);

    using M = std::pair<Rational, int>;
    t.XYZ[0] = {M{one, -3}, M{one, -1}, M{one, -1}};
    t.XYZ[1] = {M{P8, -1}, M{one, -1}, M{one, -1}};
    t.XYZ[2] = {M{P8, -1}, M{P4, 1}, M{one, -1}};
    t.XYZ[3] = {M{P8, -1}, M{P4, -1}, M{one, 1}};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 3; ++k)
        {
            auto m = t.XYZ[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            t.XYZ[static_cast<std::size_t>(i + 4)][static_cast<std::size_t>(k)] = {m.first, -m.second};
        }
    return t;
}

LaurentQ tilde_f_from_table(unsigned long p, int m1, int m2, int m3)
{
    HpTable t = hp_table(p);
    LaurentQ s(Var::X);
    for (std::size_t i = 0; i < 8; ++i)
    {
        auto m = mono_mul(mono_mul(mono_pow(t.XYZ[i][0], m1), mono_pow(t.XYZ[i][1], m2)), mono_pow(t.XYZ[i][2], m3));
        s += t.N[i] * xmono(m.first, m.second);
    }
    return divide_exact(s, t.D, "eight-term table does not reproduce tilde f");
}

HpReport hp_verify(unsigned long p, int M, Exec exec, bool table_route)
{
    if (M < 1)
        throw std::invalid_argument("truncation order must be >= 1");
    HpReport rep;
    rep.p = p;
    rep.M = M;
    auto closed = hp_closed_series(p, M);
    rep.coefficients = closed.coeffs();

    PSeries P = P_closed(p, M);
    HpTable tab = hp_table(p);
    LaurentQ D2 = tab.D * tab.D;
    // N_i N_j and the monomials X_iX_j, Y_iY_j, Z_iZ_j for i <= j
    struct Pair
    {
        LaurentQ weight;
        std::array<std::pair<Rational, int>, 3> xyz;
    };
    std::vector<Pair> pairs;
    if (table_route)
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i; j < 8; ++j)
            {
                LaurentQ w = tab.N[i] * tab.N[j];
                if (i != j)
                    w = w.scaled(Rational(2));
                pairs.push_back({w,
                                 {mono_mul(tab.XYZ[i][0], tab.XYZ[j][0]), mono_mul(tab.XYZ[i][1], tab.XYZ[j][1]),
                                  mono_mul(tab.XYZ[i][2], tab.XYZ[j][2])}});
            }

    std::vector<std::string> failure(static_cast<std::size_t>(M) + 1);
    auto check = [&](int m) {
        const LaurentQ& h = closed[m];
        if (!(lambda_p(p, m) == h))
            return std::string("lambda");
        if (!table_route)
            return std::string();
        LaurentQ s(Var::X);
        for (const auto& pr : pairs)
        {
            LaurentQ q(Var::X);
            for (const auto& [k, c] : P[static_cast<std::size_t>(m)])
            {
                auto mo = mono_mul(mono_mul(mono_pow(pr.xyz[0], k[0]), mono_pow(pr.xyz[1], k[1])),
                                   mono_pow(pr.xyz[2], k[2]));
                Rational cc = c * mo.first;
                q.add_to(mo.second, cc);
            }
            s += pr.weight * q;
        }
        if (!(s == h * D2))
            return std::string("table");
        return std::string();
    };

    if (exec == Exec::parallel)
    {
#pragma omp parallel for schedule(dynamic, 1)
        for (int m = 0; m <= M; ++m)
        {
            try
            {
                failure[static_cast<std::size_t>(m)] = check(m);
            }
            catch (const std::exception& e)
            {
                failure[static_cast<std::size_t>(m)] = e.what();
            }
        }
    }
    else
    {
        for (int m = 0; m <= M; ++m)
            failure[static_cast<std::size_t>(m)] = check(m);
    }
    for (int m = 0; m <= M; ++m)
        if (!failure[static_cast<std::size_t>(m)].empty())
        {
            rep.ok = false;
            rep.first_mismatch = m;
            rep.failed_route = failure[static_cast<std::size_t>(m)];
            break;
        }
    return rep;
}

RsEulerReport rs_euler_check(unsigned long p)
{
    HpClosedForm h = hp_closed_form(p);
    TPoly nc(Var::t, LaurentQ(Var::X, Rational(1))), dc = nc, ne = nc, de = nc;
    for (const auto& f : h.numerator)
        nc *= f;
    for (const auto& f : h.denominator)
        dc *= f;
    RsEulerReport rep;
    rep.p = p;
    for (int i = 1; i <= 3; ++i)
    {
        ne *= t_binomial(-pw(p, -4 * i - 6), 0, 2);
        rep.zeta_inverse.push_back("1-p^" + std::to_string(-4 * i - 6) + "t^2");
        Rational q = pw(p, 3 - 4 * i);
        de *= t_binomial(-q, 0, 1) * t_binomial(-q, 0, 1) * t_binomial(-q, 2, 1) * t_binomial(-q, -2, 1);
        rep.zeta_sym2.push_back("q=p^" + std::to_string(3 - 4 * i));
    }
    rep.ok = nc * de == ne * dc;
    return rep;
}

SpecialValue rs_closed_residue(int k)
{
    if (k < 10)
        throw std::invalid_argument("k must be >= 10");
    // the i = 1 factor zeta(s - 2k + 1) contributes the simple pole with residue 1
    SpecialValue r = constant_c();
    for (int n : {2, 6, 8, 12})
        r *= SpecialValue::zeta(n);
    for (int i = 1; i <= 3; ++i)
        r /= SpecialValue::zeta(4 * i + 6);
    for (int i = 1; i <= 3; ++i)
    {
        if (i > 1)
            r *= SpecialValue::zeta(4 * i - 3);
        r *= SpecialValue::symsq(4 * i - 3);
    }
    return r;
}

SpecialValue gamma_RS(const Rational& s)
{
    Rational two_s = 2 * s;
    if (two_s.get_den() != 1)
        throw std::invalid_argument("s must be an integer or half-integer");
    if (s <= 8)
        throw std::invalid_argument("non-positive Gamma argument");
    long s2 = two_s.get_num().get_si();
    SpecialValue r(rational_pow(Rational(2), -3 * s2));
    r *= SpecialValue::pi_half_power(static_cast<int>(24 - 3 * s2));
    for (int n = 0; n <= 2; ++n)
        r *= SpecialValue::gamma_half(static_cast<int>(s2 - 8 * n));
    return r;
}

Rational gamma_k(int k)
{
    if (k < 10)
        throw std::invalid_argument("k must be >= 10");
    unsigned long K = static_cast<unsigned long>(k);
    Integer num = 691 * factorial(2 * K - 1) * factorial(2 * K - 5) * factorial(2 * K - 9);
    Integer den = integer_pow(2, 12 * K - 7) * 27 * 5 * 49 * 13;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational gamma_k_derived(int k)
{
    SpecialValue res = rs_closed_residue(k);
    // residue prefactor at weight 2k, without <F,F>
    SpecialValue pre(rational_pow(Rational(2), 12L * k - 2));
    pre *= SpecialValue::pi_half_power(2 * (6 * k - 12));
    for (int i = 1; i <= 3; ++i)
        pre /= SpecialValue(Rational(factorial(static_cast<unsigned long>(2 * k - 4 * i + 3))));
    pre *= SpecialValue::xi(5) * SpecialValue::xi(9);
    pre /= SpecialValue::xi(10) * SpecialValue::xi(14) * SpecialValue::xi(18);

    SpecialValue period = res / pre;
    SpecialValue shape = SpecialValue::pi_half_power(2 * (-6 * k - 3));
    for (int r : {1, 5, 9})
        shape *= SpecialValue::symsq(r);
    if (!period.is_monomial() || period.monomial().first != shape.monomial().first)
        throw ArithmeticError("residue algebra mismatch");
    return period.monomial().second;
}

} // namespace heptalift
