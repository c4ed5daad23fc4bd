#include "heptalift/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include <omp.h>

#include "heptalift/census.hpp"
#include "heptalift/density.hpp"
#include "heptalift/genfun.hpp"
#include "heptalift/lift.hpp"
#include "heptalift/lvalue.hpp"
#include "heptalift/siegel.hpp"

namespace heptalift
{

namespace
{

using OZ = Octonion<Integer>;
using JZ = JordanElement<Integer>;

struct Tally
{
    long checks = 0, failures = 0;
    std::string first;

    void expect(bool cond, const std::string& what)
    {
        ++checks;
        if (!cond && failures++ == 0)
            first = what;
    }
    bool finish(std::string& detail, const std::string& extra = "")
    {
        std::ostringstream o;
        o << checks << " checks";
        if (!extra.empty())
            o << ", " << extra;
        if (failures)
            o << ", " << failures << " failed, first: " << first;
        detail = o.str();
        return failures == 0;
    }
};

OZ random_oct(std::mt19937_64& rng, int bound)
{
    return random_octonion(rng, bound);
}

// e-basis product of two order elements given by doubled e-coordinates;
// returns doubled e-coordinates of the product
std::array<long, 8> e2_product(const std::array<Integer, 8>& a, const std::array<Integer, 8>& b)
{
    std::array<Integer, 8> r{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
        {
            auto u = e_product(i, j);
            r[static_cast<std::size_t>(u.index)] += u.sign * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    std::array<long, 8> out{};
    for (int k = 0; k < 8; ++k)
    {
        if (!mpz_divisible_ui_p(r[static_cast<std::size_t>(k)].get_mpz_t(), 2))
            throw ArithmeticError("product leaves the order");
        out[static_cast<std::size_t>(k)] = Integer(r[static_cast<std::size_t>(k)] / 2).get_si();
    }
    return out;
}

bool c1_algebra(std::string& detail)
{
    Tally t;
    t.expect(gram_determinant() == 1, "Gram determinant");
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
        {
            OZ x = OZ::basis(i), y = OZ::basis(j);
            OZ xy = x * y;
            t.expect(xy.norm() == x.norm() * y.norm(), "basis composition");
            t.expect((x * x) * y == x * (x * y), "basis left alternativity");
            t.expect((y * x) * x == y * (x * x), "basis right alternativity");
            // closure, recomputed in the e-basis
            bool closed = true;
            try
            {
                closed = OZ::from_e2(e2_product(e2_coords(x), e2_coords(y))) == xy;
            }
            catch (const ArithmeticError&)
            {
                closed = false;
            }
            t.expect(closed, "order closure");
        }
    std::mt19937_64 rng(1);
    for (int n = 0; n < 10000; ++n)
    {
        OZ x = random_oct(rng, 3), y = random_oct(rng, 3);
        t.expect((x * y).norm() == x.norm() * y.norm(), "composition");
        t.expect((x * x) * y == x * (x * y), "left alternativity");
        t.expect((y * x) * x == y * (x * x), "right alternativity");
    }
    return t.finish(detail);
}

// coefficient of t in det(X + tY), by interpolation at t = -1, 0, 1, 2
Integer det_linear_term(const JZ& X, const JZ& Y)
{
    auto f = [&](int s) { return det(X + Y.scaled(Integer(s))); };
    Integer six = -f(2) + 6 * f(1) - 3 * f(0) - 2 * f(-1);
    if (!mpz_divisible_ui_p(six.get_mpz_t(), 6))
        throw ArithmeticError("interpolation is not integral");
    return six / 6;
}

bool c2_jordan(std::string& detail)
{
    Tally t;
    std::mt19937_64 rng(2);
    for (int n = 0; n < 1000; ++n)
    {
        JZ X = random_jordan(rng, 3);
        auto [gX, nu] = apply_generator(random_word(rng, 6), X);
        t.expect(det(gX) == nu * det(X), "det(gX) = nu det X");
    }
    for (int n = 0; n < 1000; ++n)
    {
        JZ X = random_jordan(rng, 3), Y = random_jordan(rng, 3);
        t.expect(det_linear_term(X, Y) == inner(cross(X, X), Y), "directional derivative");
    }
    return t.finish(detail);
}

bool c3_census(std::string& detail)
{
    CensusCounts c = census_f2(Exec::parallel);
    Tally t;
    t.expect(c.total() == kCensusSize, "partition");
    t.expect(c.rank[3] == 64884736u, "rank3 count");
    Rational beta = beta_from_census(c);
    t.expect(beta == beta_p(make_divisors(2, 0, 0, 0)), "beta_2(0,0,0)");
    std::ostringstream o;
    o << "rank0..3 = " << c.rank[0] << "," << c.rank[1] << "," << c.rank[2] << "," << c.rank[3] << ", beta = "
      << beta.get_str() << ", kernel " << c.seconds << " s";
    return t.finish(detail, o.str());
}

bool c4_igusa(std::string& detail)
{
    Tally t;
    for (unsigned long p : {2ul, 3ul, 5ul})
        t.expect(igusa_verify(p, 12).ok, "p = " + std::to_string(p));
    return t.finish(detail);
}

bool c5_beta(std::string& detail)
{
    Tally t;
    for (unsigned long p : {2ul, 3ul, 5ul})
    {
        Rational P(static_cast<long>(p));
        for (int a3 = 0; a3 <= 6; ++a3)
            for (int a2 = 0; a2 <= a3; ++a2)
                for (int a1 = 0; a1 <= a2; ++a1)
                {
                    ElemDivisors d{p, a1, a2, a3};
                    std::string at = " at p = " + std::to_string(p) + " " + d.str();
                    t.expect(beta_p({p, a1 + 1, a2 + 1, a3 + 1}) == rational_pow(P, 27) * beta_p(d), "shift" + at);
                    t.expect(beta_p(make_divisors(p, a2 + a3, a1 + a3, a1 + a2)) ==
                                 rational_pow(P, 9 * d.sum()) * beta_p(d),
                             "adjoint" + at);
                    if (a1 == 0 && 0 < a2 && a2 < a3)
                        t.expect(beta_p({p, a1, a2, a3 + 1}) == P * beta_p(d), "a3 step" + at);
                }
    }
    return t.finish(detail);
}

bool c6_siegel(std::string& detail)
{
    Tally t;
    for (unsigned long p : {2ul, 3ul, 5ul})
        for (int m1 = 0; 3 * m1 <= 9; ++m1)
            for (int m2 = 0; 3 * m1 + m2 <= 9; ++m2)
                for (int m3 = m2; 3 * m1 + m2 + m3 <= 9; ++m3)
                {
                    std::string at = " p = " + std::to_string(p) + " m = (" + std::to_string(m1) + "," +
                                     std::to_string(m2) + "," + std::to_string(m3) + ")";
                    SiegelPoly s = f_poly(p, m1, m2, m3);
                    t.expect(s.poly == f_poly_oracle(p, m1, m2, m3).poly, "oracle" + at);
                    t.expect(s.degree() == 3 * m1 + m2 + m3 && s.poly.max_exponent() == s.degree(), "degree" + at);
                    t.expect(s.poly.coeff(0) == 1, "f(0)" + at);
                    bool integral = true;
                    for (const auto& [e, c] : s.poly.terms())
                        integral &= c.get_den() == 1;
                    t.expect(integral, "integrality" + at);
                    LaurentQ tf = tilde_f(s);
                    t.expect(tf == tf.substitute_power(-1), "functional equation" + at);
                }
    return t.finish(detail);
}

bool c7_hp(std::string& detail)
{
    Tally t;
    for (unsigned long p : {2ul, 3ul, 5ul})
    {
        HpReport r = hp_verify(p, 10, Exec::parallel);
        t.expect(r.ok, "p = " + std::to_string(p) + " route " + r.failed_route + " at t^" +
                           std::to_string(r.first_mismatch));
    }
    return t.finish(detail, "through t^10");
}

bool c8_residue(std::string& detail)
{
    Tally t;
    for (int k = 10; k <= 15; ++k)
        t.expect(gamma_k_derived(k) == gamma_k(k), "k = " + std::to_string(k));
    Rational g10 = Rational(691 * factorial(19) * factorial(15) * factorial(11)) /
                   Rational(integer_pow(2, 113) * 27 * 5 * 49 * 13);
    t.expect(gamma_k(10) == g10, "k = 10 value");
    return t.finish(detail, "gamma_10 = " + gamma_k(10).get_str());
}

bool c9_mass(std::string& detail)
{
    Tally t;
    Rational m = mass(JZ::identity());
    t.expect(m == Rational(691) / Rational(Integer(32768) * 729 * 25 * 49 * 13), "mass(1_3)");
    t.expect(mass(JZ::identity().scaled(Integer(2))) == m, "mass(2 1_3)");
    return t.finish(detail, "mass(1_3) = " + m.get_str());
}

bool c10_lift(std::string& detail)
{
    Tally t;
    auto tau = tau_table(100);
    t.expect(tau[1] == 1, "tau(1)");
    t.expect(tau[6] == tau[2] * tau[3], "tau(6)");
    EigenData e = eigen_delta(100);
    t.expect(fourier_coeff(JZ::identity(), e) == 1, "a(1_3)");
    t.expect(fourier_coeff(JZ::diag(1, 1, 2), e) == tau[2], "a(diag(1,1,2))");
    t.expect(fourier_coeff(JZ::diag(1, 1, 4), e) == tau[4], "a(diag(1,1,4))");
    t.expect(tau[2] == -24 && tau[4] == -1472, "tau values");
    for (unsigned long p : {2ul, 3ul})
    {
        Integer pw = integer_pow(p, 11);
        auto a = [&](int m) { return fourier_coeff(JZ::diag(1, 1, Integer(integer_pow(p, static_cast<unsigned long>(m)))), e); };
        for (int m = 1; m <= 4; ++m)
            t.expect(a(m + 1) == Rational(e.at(p)) * a(m) - Rational(pw) * a(m - 1),
                     "Hecke p = " + std::to_string(p) + " m = " + std::to_string(m));
    }
    return t.finish(detail);
}

bool c11_padic(std::string& detail)
{
    Tally t;
    std::mt19937_64 rng(11);
    for (unsigned long p : {2ul, 3ul, 5ul})
    {
        std::uniform_int_distribution<int> ex(0, 4);
        for (int n = 0; n < 200; ++n)
        {
            int a = ex(rng), b = ex(rng), c = ex(rng);
            JZ D = JZ::diag(integer_pow(p, static_cast<unsigned long>(a)), integer_pow(p, static_cast<unsigned long>(b)),
                            integer_pow(p, static_cast<unsigned long>(c)));
            auto [T, nu] = apply_generator(random_unimodular_word(rng, 10), D);
            std::string at = "p = " + std::to_string(p) + " (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")";
            t.expect(nu == 1, "multiplier " + at);
            ElemDivisors d = elementary_divisors(T, p);
            t.expect(d == make_divisors(p, a, b, c), "round trip " + at);
            t.expect(d.sum() == valuation(det(T), p), "sum rule " + at);
        }
    }
    return t.finish(detail);
}

bool c12_period(std::string& detail)
{
    Tally t;
    EigenData e = eigen_delta(10000);
    LValueOptions o;
    o.digits = 20;
    BigFloat smooth = sym2_lvalue(e, 9, o);
    BigFloat plain = sym2_lvalue_plain(e, 9, 10000, 20);
    BigFloat diff(smooth.precision());
    mpfr_sub(diff.get(), smooth.get(), plain.get(), MPFR_RNDN);
    double rel = std::fabs(diff.to_double() / smooth.to_double());
    t.expect(rel < 1e-10, "plain vs smoothed at s = 9");

    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    PeriodResult one = period(10, e, 20, Exec::parallel);
    omp_set_num_threads(4);
    PeriodResult four = period(10, e, 20, Exec::parallel);
    omp_set_num_threads(saved);
    PeriodResult ser = period(10, e, 20, Exec::serial);
    t.expect(mpfr_equal_p(one.value.get(), four.value.get()) && mpfr_equal_p(one.value.get(), ser.value.get()),
             "period bit-identical across thread counts");

    ProbeResult pr = rationality_probe(e, {20, 30});
    t.expect(pr.r5.has_value() && pr.r9.has_value(), "rho_5 and rho_9 stabilize");
    std::ostringstream o2;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", rel);
    o2 << "s = 9 agreement " << buf << ", rho5 = " << (pr.r5 ? pr.r5->get_str() : "none")
       << ", rho9 = " << (pr.r9 ? pr.r9->get_str() : "none");
    return t.finish(detail, o2.str());
}

} // namespace

const std::vector<Criterion>& acceptance_criteria()
{
    static const std::vector<Criterion> all = {
        {1, "algebra laws", 1.0, c1_algebra},
        {2, "Jordan identities", 10.0, c2_jordan},
        {3, "census oracle", 300.0, c3_census},
        {4, "Igusa consistency", 1.0, c4_igusa},
        {5, "beta recursions", 1.0, c5_beta},
        {6, "Siegel series", 30.0, c6_siegel},
        {7, "H_p identity", 120.0, c7_hp},
        {8, "residue algebra", 1.0, c8_residue},
        {9, "mass", 1.0, c9_mass},
        {10, "lift coefficients", 5.0, c10_lift},
        {11, "p-adic round trip", 60.0, c11_padic},
        {12, "period pipeline", 300.0, c12_period},
    };
    return all;
}

std::vector<CriterionResult> run_acceptance(std::FILE* log, const std::vector<int>& only)
{
    std::vector<CriterionResult> out;
    for (const auto& c : acceptance_criteria())
    {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end())
            continue;
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        r.limit = c.limit_seconds;
        auto t0 = std::chrono::steady_clock::now();
        try
        {
            r.ok = c.run(r.detail);
        }
        catch (const std::exception& ex)
        {
            r.ok = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.in_time = r.seconds <= r.limit;
        if (log)
        {
            std::fprintf(log, "%s  %2d %-20s %8.3f s (limit %g s)  %s%s\n", r.passed() ? "PASS" : "FAIL", r.id,
                         r.name.c_str(), r.seconds, r.limit, r.in_time ? "" : "[over time] ", r.detail.c_str());
            std::fflush(log);
        }
        out.push_back(std::move(r));
    }
    return out;
}

nlohmann::json to_json(const CriterionResult& r)
{
    return {{"id", r.id},         {"name", r.name},   {"status", r.passed() ? "PASS" : "FAIL"},
            {"seconds", r.seconds}, {"limit", r.limit}, {"detail", r.detail}};
}

} // namespace heptalift
