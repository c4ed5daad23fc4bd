#include <doctest.h>

#include <cmath>
#include <cstring>

#include "heptalift/lvalue.hpp"

using namespace heptalift;

namespace
{

double rel_diff(const BigFloat& a, const BigFloat& b)
{
    BigFloat d(a.precision());
    mpfr_sub(d.get(), a.get(), b.get(), MPFR_RNDN);
    return std::fabs(d.to_double() / b.to_double());
}

bool identical(const BigFloat& a, const BigFloat& b)
{
    return mpfr_equal_p(a.get(), b.get()) != 0;
}

const EigenData& delta()
{
    static const EigenData e = eigen_delta(10000);
    return e;
}

} // namespace

TEST_CASE("Dirichlet coefficients of Sym^2")
{
    const auto& e = delta();
    auto b = sym2_dirichlet_coeffs(e, 1000);
    auto d3 = divisor3_table(1000);
    CHECK(b[1] == 1);
    CHECK(d3[1] == 1);
    CHECK(d3[2] == 3);
    CHECK(d3[12] == 18);
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 997ul})
    {
        Integer a = e.at(p);
        CHECK(b[p] == Rational(a * a) / Rational(integer_pow(p, 11)) - 1);
    }
    // multiplicativity and the Ramanujan bound
    CHECK(b[6] == b[2] * b[3]);
    CHECK(b[100] == b[4] * b[25]);
    for (std::size_t n = 1; n <= 1000; ++n)
        CHECK(abs(b[n]) <= d3[n]);
    CHECK_THROWS_AS(sym2_dirichlet_coeffs(eigen_delta(50), 100), std::invalid_argument);
}

TEST_CASE("smoothed series against the plain sum at s = 9")
{
    const auto& e = delta();
    LValueOptions o;
    o.digits = 20;
    BigFloat smooth = sym2_lvalue(e, 9, o);
    BigFloat plain = sym2_lvalue_plain(e, 9, 10000, 20);
    CHECK(rel_diff(smooth, plain) < 1e-12);
    CHECK(plain.err < 1e-12);
    // the Euler product converges like P^{-8}
    BigFloat euler = sym2_euler_product(e, 9, 2000, 20);
    CHECK(rel_diff(smooth, euler) < 1e-20 + euler.err);
    CHECK(euler.err < 1e-18);
}

TEST_CASE("plain sum at s = 5")
{
    const auto& e = delta();
    LValueOptions o;
    o.digits = 20;
    BigFloat smooth = sym2_lvalue(e, 5, o);
    BigFloat plain = sym2_lvalue_plain(e, 5, 10000, 20);
    // the tail is about N^{-4} log^2 N
    CHECK(rel_diff(smooth, plain) < 1e-8);
}

TEST_CASE("independence of the splitting point and of the cutoff")
{
    const auto& e = delta();
    for (int s : {1, 5, 9})
    {
        CAPTURE(s);
        LValueOptions a, b;
        a.digits = b.digits = 25;
        b.A = 1.3;
        BigFloat la = sym2_lvalue(e, s, a), lb = sym2_lvalue(e, s, b);
        CHECK(rel_diff(la, lb) < 1e-24);
        CHECK(la.correct_digits() >= 25);
    }
    CHECK(sym2_terms_needed(10, 1, 40) > sym2_terms_needed(10, 1, 20));
    CHECK_THROWS_AS(sym2_terms_needed(10, 0, 20), std::invalid_argument);
    CHECK_THROWS_AS(sym2_terms_needed(10, 12, 20), std::invalid_argument);
}

TEST_CASE("values for Delta")
{
    const auto& e = delta();
    LValueOptions o;
    o.digits = 40;
    BigFloat l1 = sym2_lvalue(e, 1, o);
    CHECK(l1.str(22) == "6.317929457278832030111e-01");
    // a raised precision agrees with the lower one to its stated digits
    LValueOptions lo;
    lo.digits = 20;
    CHECK(rel_diff(sym2_lvalue(e, 1, lo), l1) < 1e-20);
    CHECK_THROWS_AS(sym2_lvalue(eigen_delta(20), 1, o), std::invalid_argument);
}

TEST_CASE("period and thread independence")
{
    const auto& e = delta();
    auto par = period(10, e, 20, Exec::parallel);
    auto ser = period(10, e, 20, Exec::serial);
    CHECK(par.value.to_double() > 0);
    CHECK(par.pi_power == -63);
    CHECK(par.gamma_k == gamma_k(10));
    CHECK(identical(par.value, ser.value));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(identical(par.lvalues[i], ser.lvalues[i]));
}

TEST_CASE("rationality probe")
{
    const auto& e = delta();
    auto r = rationality_probe(e, {20, 30});
    REQUIRE(r.r5);
    REQUIRE(r.r9);
    CHECK(*r.r5 == Rational(2) / 12285);
    CHECK(*r.r9 == Rational(256) / 14582602125);
    // a perturbed L(1) must not produce a stable rational
    auto bad = rationality_probe(e, {20, 30}, 1e-12);
    CHECK_FALSE(bad.r5);
    CHECK_FALSE(bad.r9);
}

TEST_CASE("reconstruct")
{
    BigFloat x = BigFloat::from_rational(Rational(256) / 14582602125, 200);
    auto q = reconstruct(x, 30);
    REQUIRE(q);
    CHECK(*q == Rational(256) / 14582602125);
    BigFloat pi(200);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    CHECK_FALSE(reconstruct(pi, 30));
    auto j = to_json(x, 10);
    CHECK(j["value"].get<std::string>() == "1.755516593e-08");
}
