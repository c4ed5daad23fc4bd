#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "heptalift/lift.hpp"

using namespace heptalift;
using JZ = JordanElement<Integer>;

TEST_CASE("tau")
{
    auto tau = tau_table(30);
    CHECK(tau[1] == 1);
    CHECK(tau[2] == -24);
    CHECK(tau[3] == 252);
    CHECK(tau[4] == -1472);
    CHECK(tau[5] == 4830);
    CHECK(tau[6] == tau[2] * tau[3]);
    CHECK(tau[10] == tau[2] * tau[5]);
    CHECK(tau[4] == tau[2] * tau[2] - 2048);
    CHECK(tau[23] == 18643272);
    // Hecke recursion at prime powers
    CHECK(tau[8] == tau[2] * tau[4] - 2048 * tau[2]);
    CHECK(tau[27] == tau[3] * tau[9] - 177147 * tau[3]);
}

TEST_CASE("Satake power sums")
{
    auto t = satake_power_sums(Integer(-24), 2, 10, 4);
    CHECK(t[0] == 2);
    CHECK(t[1] == -24);
    CHECK(t[2] == -3520);
    CHECK(t[3] == -24 * t[2] - 2048 * t[1]);
}

TEST_CASE("Fourier coefficients of the lift of Delta")
{
    auto e = eigen_delta(100);
    auto tau = tau_table(300);
    CHECK(fourier_coeff(JZ::identity(), e) == 1);
    CHECK(fourier_coeff(JZ::diag(1, 1, 2), e) == -24);
    CHECK(fourier_coeff(JZ::diag(1, 1, 4), e) == -1472);
    // rank-one pattern reproduces the Hecke recursion
    for (unsigned long p : {2ul, 3ul})
    {
        Integer p11 = integer_pow(p, 11);
        auto a = [&](int m) { return fourier_coeff(JZ::diag(1, 1, Integer(integer_pow(p, m))), e); };
        for (int m = 1; m <= 4; ++m)
            CHECK(a(m + 1) == Rational(e.at(p)) * a(m) - Rational(p11) * a(m - 1));
        CHECK(a(4) == Rational(tau[integer_pow(p, 4).get_ui()]));
    }
    CHECK_THROWS(fourier_coeff(JZ::diag(1, -1, 1), e));
}

TEST_CASE("Fourier coefficients are genus invariants and integral")
{
    auto e = eigen_delta(50);
    std::mt19937_64 rng(17);
    std::vector<JZ> seeds = {JZ::diag(1, 2, 6), JZ::diag(1, 4, 12), JZ::diag(2, 2, 3), JZ::diag(3, 9, 9)};
    for (const auto& T : seeds)
    {
        Rational a = fourier_coeff(T, e);
        CHECK(a.get_den() == 1);
        for (int trial = 0; trial < 5; ++trial)
        {
            auto [U, nu] = apply_generator(random_unimodular_word(rng, 6, 1), T);
            CHECK(nu == 1);
            CHECK(fourier_coeff(U, e) == a);
        }
    }
    auto rows = lift_table(e, 30);
    for (const auto& r : rows)
        CHECK(r.coefficient.get_den() == 1);
    CHECK(rows.front().det == 1);
    CHECK(rows.front().coefficient == 1);
}

TEST_CASE("eigen CSV ingest")
{
    const char* path = "eigen_test.csv";
    {
        std::ofstream o(path);
        o << "p,a_p\n2,-24\n3,252\n";
    }
    auto e = eigen_from_csv(path, 10);
    CHECK(e.at(3) == 252);
    CHECK(e.covers(3));
    CHECK_FALSE(e.covers(5));
    {
        std::ofstream o(path);
        o << "p,a_p\n2,100\n";
    }
    CHECK_THROWS(eigen_from_csv(path, 10)); // 100^2 > 4 * 2^11
    std::remove(path);
}

TEST_CASE("local L-factors")
{
    // alpha = 1
    auto f = local_L_factors_from_trace(3, Surd(Rational(2)));
    SurdPoly cube = {Surd(Rational(1)), Surd(Rational(-3)), Surd(Rational(3)), Surd(Rational(-1))};
    SurdPoly fourth = {Surd(Rational(1)), Surd(Rational(-4)), Surd(Rational(6)), Surd(Rational(-4)), Surd(Rational(1))};
    CHECK(f.sym2 == cube);
    CHECK(f.sym3 == fourth);
    CHECK(f.std56_degree() == 56);
    CHECK(f.std56.size() == 27);

    // sym2 linear coefficient is -(a_p^2 p^-w - 1)
    auto g = local_L_factors(2, Integer(-24), 10);
    CHECK(g.sym2[1] == Surd(-(Rational(576) / 2048 - 1)));
    CHECK(g.sym2[3] == Surd(Rational(-1)));
    // sym3 has only odd sqrt(p) parts in odd degrees
    CHECK(g.sym3[1].a == 0);
    CHECK(g.sym3[2].b == 0);
}
