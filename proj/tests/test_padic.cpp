#include <doctest.h>

#include "heptalift/padic.hpp"

using namespace heptalift;
using JZ = JordanElement<Integer>;

namespace
{

JZ power_diag(unsigned long p, int a, int b, int c)
{
    return JZ::diag(integer_pow(p, a), integer_pow(p, b), integer_pow(p, c));
}

} // namespace

TEST_CASE("elementary divisor examples")
{
    CHECK(elementary_divisors(power_diag(3, 0, 1, 3), 3) == ElemDivisors{3, 0, 1, 3});
    JZ T = JZ::diag(2, 2, 1);
    T.x = Octonion<Integer>::e(1);
    CHECK(elementary_divisors(T, 3, 2) == ElemDivisors{3, 0, 0, 1});
    CHECK(elementary_divisors(power_diag(2, 3, 0, 1), 2) == ElemDivisors{2, 0, 1, 3});
    CHECK_THROWS_WITH(elementary_divisors(power_diag(2, 1, 1, 1), 2, 3), "insufficient precision");
    CHECK_THROWS_AS(elementary_divisors(JZ::diag(1, 1, 0), 2), ArithmeticError);
}

TEST_CASE("genus invariants")
{
    CHECK(genus_invariants(JZ::identity()).empty());
    auto g = genus_invariants(JZ::diag(1, 1, 4));
    REQUIRE(g.size() == 1);
    CHECK(g.at(2) == ElemDivisors{2, 0, 0, 2});
    JZ T = JZ::diag(2, 2, 1);
    T.x = Octonion<Integer>::e(1);
    auto h = genus_invariants(T);
    REQUIRE(h.size() == 1);
    CHECK(h.at(3) == ElemDivisors{3, 0, 0, 1});
}

TEST_CASE("factorization")
{
    auto f = factor_integer(Integer("-1234567890123"));
    Integer prod = 1;
    for (const auto& [p, e] : f)
    {
        CHECK(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
        for (int i = 0; i < e; ++i)
            prod *= p;
    }
    CHECK(prod == Integer("1234567890123"));
}

TEST_CASE("round trip through random unimodular words")
{
    std::mt19937_64 rng(2024);
    for (unsigned long p : {2ul, 3ul, 5ul})
    {
        std::uniform_int_distribution<int> e(0, 4);
        for (int trial = 0; trial < 60; ++trial)
        {
            int a = e(rng), b = e(rng), c = e(rng);
            auto [T, nu] = apply_generator(random_unimodular_word(rng, 10), power_diag(p, a, b, c));
            CHECK(nu == 1);
            auto d = elementary_divisors(T, p);
            CHECK(d == make_divisors(p, a, b, c));
            CHECK(d.sum() == valuation(det(T), p));
            // higher precision gives the same answer
            CHECK(elementary_divisors(T, p, d.sum() + 3) == d);
        }
    }
}

TEST_CASE("sum rule, adjoint rule and invariance on random elements")
{
    std::mt19937_64 rng(99);
    int tested = 0;
    while (tested < 150)
    {
        JZ T = random_jordan(rng, 3);
        Integer d = det(T);
        if (sgn(d) == 0)
            continue;
        ++tested;
        for (const auto& [p, ed] : genus_invariants(T))
        {
            CHECK(ed.sum() == valuation(d, p));
            auto [gT, nu] = apply_generator(random_unimodular_word(rng, 6), T);
            CHECK(elementary_divisors(gT, p) == ed);
            CHECK(elementary_divisors(adjoint(T), p) ==
                  make_divisors(p, ed.a2 + ed.a3, ed.a1 + ed.a3, ed.a1 + ed.a2));
        }
    }
}
