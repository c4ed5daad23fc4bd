#include <doctest.h>

#include <random>

#include "heptalift/census.hpp"
#include "heptalift/density.hpp"

using namespace heptalift;

TEST_CASE("packing")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint32_t> d(0, kCensusSize - 1);
    for (int t = 0; t < 1000; ++t)
    {
        PackedJordanF2 v = d(rng);
        CHECK(pack_f2(unpack_f2(v)) == v);
    }
    CHECK(rank_f2(0) == 0);
    CHECK(rank_f2(1) == 1);       // diag(1,0,0)
    CHECK(rank_f2(0b011) == 2);   // diag(1,1,0)
    CHECK(rank_f2(0b111) == 3);   // identity
    CHECK_THROWS_AS(rank_f2(kCensusSize), std::out_of_range);
}

TEST_CASE("packed kernel against generic Jordan arithmetic")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint32_t> d(0, kCensusSize - 1);
    int bad = 0;
    for (int t = 0; t < 100000; ++t)
    {
        PackedJordanF2 v = d(rng);
        if (rank_f2(v) != rank_f2_generic(v))
            ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("census of J(F_2)")
{
    CensusCounts c = census_f2(Exec::parallel);
    CHECK(c.total() == kCensusSize);
    CHECK(c.rank[0] == 1);
    CHECK(Integer(c.rank[3]) == nonsingular_count(2));
    CHECK(c.rank[3] == 64884736u);
    Rational beta = beta_from_census(c);
    CHECK(beta == density_constants(2).c1);
    CHECK(Rational(Integer(c.rank[3])) / Integer(kCensusSize) ==
          Rational(1, 2) * (1 - Rational(1, 32)) * (1 - Rational(1, 512)));
    for (int threads : {1, 4, 16})
        CHECK(census_f2(Exec::parallel, threads) == c);
    CHECK(census_f2(Exec::serial) == c);

    CensusCounts broken = c;
    broken.rank[3] -= 1;
    broken.rank[2] += 1;
    CHECK_THROWS_AS(beta_from_census(broken), ArithmeticError);
}

TEST_CASE("sampling J(F_3)")
{
    auto r = census_f3_sample(20000, 5);
    CHECK(r.samples == 20000);
    CHECK(r.low < r.fraction);
    CHECK(r.fraction < r.high);
    CHECK(r.consistent());
}
