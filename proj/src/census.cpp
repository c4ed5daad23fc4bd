#include "heptalift/census.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include <omp.h>

#include "heptalift/density.hpp"

namespace heptalift
{

namespace
{

// Octonion arithmetic on o/2o, eight bits in the alpha basis. Each output
// bit of a product is a quadratic form in the 16 input bits; the networks
// below store its coefficient masks, and the 256 x 256 table is generated
// from them once.
struct F2Oct
{
    std::array<std::array<std::uint8_t, 8>, 8> pmask{}; // alpha_i alpha_j mod 2
    std::array<std::uint8_t, 8> cmask{};                // conj(alpha_i) mod 2
    std::uint8_t tmask = 0;                             // trace mod 2
    std::array<std::uint8_t, 8> nlin{};                 // N(x) = sum_{i<=j} x_i x_j q_ij
    std::array<std::array<std::uint8_t, 256>, 256> mul{};
    std::array<std::uint8_t, 256> conj{}, norm{}, trace{};

    static int parity(unsigned v) { return __builtin_parity(v); }

    std::uint8_t mul_network(unsigned x, unsigned y) const
    {
        std::uint8_t r = 0;
        for (int i = 0; i < 8; ++i)
            if (x >> i & 1)
                for (int j = 0; j < 8; ++j)
                    if (y >> j & 1)
                        r ^= pmask[i][j];
        return r;
    }
    std::uint8_t conj_network(unsigned x) const
    {
        std::uint8_t r = 0;
        for (int i = 0; i < 8; ++i)
            if (x >> i & 1)
                r ^= cmask[i];
        return r;
    }
    int norm_network(unsigned x) const
    {
        int n = 0;
        for (int i = 0; i < 8; ++i)
            if (x >> i & 1)
                n ^= parity(x & nlin[i]);
        return n;
    }

    F2Oct()
    {
        const auto& sc = structure_constants();
        for (int i = 0; i < 8; ++i)
        {
            for (int j = 0; j < 8; ++j)
                for (int k = 0; k < 8; ++k)
                {
                    if (sc.mul[i][j][k] & 1)
                        pmask[i][j] |= static_cast<std::uint8_t>(1u << k);
                }
            for (int k = 0; k < 8; ++k)
                if (sc.conj[i][k] & 1)
                    cmask[i] |= static_cast<std::uint8_t>(1u << k);
            if (sc.trace[i] & 1)
                tmask |= static_cast<std::uint8_t>(1u << i);
            // diagonal q_ii = gram_ii / 2, off-diagonal q_ij = gram_ij (i < j)
            if ((sc.gram[i][i] / 2) & 1)
                nlin[i] |= static_cast<std::uint8_t>(1u << i);
            for (int j = i + 1; j < 8; ++j)
                if (sc.gram[i][j] & 1)
                    nlin[i] |= static_cast<std::uint8_t>(1u << j);
        }
        for (unsigned x = 0; x < 256; ++x)
        {
            for (unsigned y = 0; y < 256; ++y)
                mul[x][y] = mul_network(x, y);
            conj[x] = conj_network(x);
            norm[x] = static_cast<std::uint8_t>(norm_network(x));
            trace[x] = static_cast<std::uint8_t>(parity(x & tmask));
        }
    }
};

const F2Oct& f2()
{
    static const F2Oct t;
    return t;
}

struct Fields
{
    unsigned a, b, c, x, y, z;
};

Fields split(PackedJordanF2 v)
{
    return {v & 1, v >> 1 & 1, v >> 2 & 1, v >> 3 & 0xff, v >> 11 & 0xff, v >> 19 & 0xff};
}

// Classification straight from the networks, no tables.
int rank_network(PackedJordanF2 v)
{
    const F2Oct& o = f2();
    auto [a, b, c, x, y, z] = split(v);
    if (v == 0)
        return 0;
    unsigned nx = o.norm_network(x), ny = o.norm_network(y), nz = o.norm_network(z);
    unsigned yb = o.conj_network(y);
    unsigned t = F2Oct::parity(o.mul_network(o.mul_network(x, z), yb) & o.tmask);
    unsigned det = (a & b & c) ^ (a & nz) ^ (b & ny) ^ (c & nx) ^ t;
    if (det)
        return 3;
    bool adj_zero = ((b & c) ^ nz) == 0 && ((a & c) ^ ny) == 0 && ((a & b) ^ nx) == 0 &&
                    (o.mul_network(y, o.conj_network(z)) ^ (c ? x : 0)) == 0 &&
                    (o.mul_network(x, z) ^ (b ? y : 0)) == 0 &&
                    (o.mul_network(o.conj_network(x), y) ^ (a ? z : 0)) == 0;
    return adj_zero ? 1 : 2;
}

// Counts for one z slice (2^19 elements).
void count_slice(unsigned z, std::array<std::uint64_t, 4>& out)
{
    const F2Oct& o = f2();
    const unsigned nz = o.norm[z], zb = o.conj[z];
    for (unsigned y = 0; y < 256; ++y)
    {
        const unsigned ny = o.norm[y], yb = o.conj[y], yzb = o.mul[y][zb];
        for (unsigned x = 0; x < 256; ++x)
        {
            const unsigned nx = o.norm[x];
            const unsigned xz = o.mul[x][z];
            const unsigned xby = o.mul[o.conj[x]][y];
            const unsigned t = o.trace[o.mul[xz][yb]];
            for (unsigned abc = 0; abc < 8; ++abc)
            {
                const unsigned a = abc & 1, b = abc >> 1 & 1, c = abc >> 2;
                const unsigned det = (a & b & c) ^ (a & nz) ^ (b & ny) ^ (c & nx) ^ t;
                if (det)
                {
                    ++out[3];
                    continue;
                }
                const bool adj_zero = ((b & c) ^ nz) == 0 && ((a & c) ^ ny) == 0 && ((a & b) ^ nx) == 0 &&
                                      (yzb ^ (c ? x : 0u)) == 0 && (xz ^ (b ? y : 0u)) == 0 &&
                                      (xby ^ (a ? z : 0u)) == 0;
                if (!adj_zero)
                    ++out[2];
                else if (abc | x | y | z)
                    ++out[1];
                else
                    ++out[0];
            }
        }
    }
}

} // namespace

JordanElement<ZMod> unpack_f2(PackedJordanF2 v)
{
    if (v >= kCensusSize)
        throw std::out_of_range("packed index exceeds 27 bits");
    auto [a, b, c, x, y, z] = split(v);
    JordanElement<ZMod> X;
    X.a = ZMod(static_cast<std::int64_t>(a), 2);
    X.b = ZMod(static_cast<std::int64_t>(b), 2);
    X.c = ZMod(static_cast<std::int64_t>(c), 2);
    auto oct = [](unsigned bits) {
        Octonion<ZMod> r;
        for (int k = 0; k < 8; ++k)
            r[k] = ZMod(static_cast<std::int64_t>(bits >> k & 1), 2);
        return r;
    };
    X.x = oct(x);
    X.y = oct(y);
    X.z = oct(z);
    return X;
}

PackedJordanF2 pack_f2(const JordanElement<ZMod>& X)
{
    auto bit = [](const ZMod& v) { return static_cast<std::uint32_t>(((v.value() % 2) + 2) % 2); };
    std::uint32_t r = bit(X.a) | bit(X.b) << 1 | bit(X.c) << 2;
    for (int k = 0; k < 8; ++k)
    {
        r |= bit(X.x[k]) << (3 + k);
        r |= bit(X.y[k]) << (11 + k);
        r |= bit(X.z[k]) << (19 + k);
    }
    return r;
}

int rank_f2(PackedJordanF2 v)
{
    if (v >= kCensusSize)
        throw std::out_of_range("packed index exceeds 27 bits");
    return rank_network(v);
}

int rank_f2_generic(PackedJordanF2 v)
{
    JordanElement<ZMod> X = unpack_f2(v);
    if (X.is_zero())
        return 0;
    if (!det(X).is_zero())
        return 3;
    return adjoint(X).is_zero() ? 1 : 2;
}

CensusCounts census_f2(Exec exec, int threads)
{
    auto t0 = std::chrono::steady_clock::now();
    (void)f2();
    std::array<std::array<std::uint64_t, 4>, 256> slices{};
    if (exec == Exec::parallel)
    {
        int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
        for (int z = 0; z < 256; ++z)
            count_slice(static_cast<unsigned>(z), slices[static_cast<std::size_t>(z)]);
    }
    else
    {
        for (unsigned z = 0; z < 256; ++z)
            count_slice(z, slices[z]);
    }
    CensusCounts out;
    for (const auto& s : slices)
        for (int r = 0; r < 4; ++r)
            out.rank[static_cast<std::size_t>(r)] += s[static_cast<std::size_t>(r)];
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

CensusCounts census_f2_reference()
{
    auto t0 = std::chrono::steady_clock::now();
    CensusCounts out;
    for (std::uint32_t v = 0; v < kCensusSize; ++v)
        ++out.rank[static_cast<std::size_t>(rank_network(v))];
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

Integer nonsingular_count(unsigned long p)
{
    Integer P(p);
    return integer_pow(p, 12) * (P - 1) * (integer_pow(p, 5) - 1) * (integer_pow(p, 9) - 1);
}

Rational beta_from_census(const CensusCounts& c)
{
    if (c.total() != kCensusSize)
        throw ArithmeticError("census is incomplete");
    if (c.rank[3] == 0)
        throw ArithmeticError("census found no nonsingular elements");
    Rational delta = density_constants(2).delta;
    Rational beta = delta * Rational(1, 2) * Rational(Integer(kCensusSize)) / Rational(Integer(c.rank[3]));
    beta.canonicalize();
    Rational expect = beta_p(make_divisors(2, 0, 0, 0));
    if (beta != expect)
        throw ArithmeticError("census density " + beta.get_str() + " differs from beta_2(0,0,0) = " +
                              expect.get_str());
    return beta;
}

SampleReport census_f3_sample(std::uint64_t samples, std::uint64_t seed)
{
    if (samples == 0)
        throw std::invalid_argument("need at least one sample");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, 2);
    SampleReport r;
    r.samples = samples;
    for (std::uint64_t s = 0; s < samples; ++s)
    {
        JordanElement<ZMod> X;
        X.a = ZMod(d(rng), 3);
        X.b = ZMod(d(rng), 3);
        X.c = ZMod(d(rng), 3);
        for (int k = 0; k < 8; ++k)
        {
            X.x[k] = ZMod(d(rng), 3);
            X.y[k] = ZMod(d(rng), 3);
            X.z[k] = ZMod(d(rng), 3);
        }
        if (!det(X).is_zero())
            ++r.nonsingular;
    }
    const double n = static_cast<double>(samples), z = 2.5758293035489004;
    r.fraction = static_cast<double>(r.nonsingular) / n;
    r.expected = (1 - 1.0 / 3) * (1 - std::pow(3.0, -5)) * (1 - std::pow(3.0, -9));
    double centre = (r.fraction + z * z / (2 * n)) / (1 + z * z / n);
    double half = z / (1 + z * z / n) * std::sqrt(r.fraction * (1 - r.fraction) / n + z * z / (4 * n * n));
    r.low = centre - half;
    r.high = centre + half;
    return r;
}

nlohmann::json to_json(const CensusCounts& c)
{
    return {{"rank0", c.rank[0]}, {"rank1", c.rank[1]}, {"rank2", c.rank[2]}, {"rank3", c.rank[3]},
            {"total", c.total()}};
}

} // namespace heptalift
