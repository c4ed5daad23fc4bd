#pragma once

#include <array>
#include <cstdint>

#include <json.hpp>

#include "heptalift/genfun.hpp"
#include "heptalift/jordan.hpp"

namespace heptalift
{

/// Element of J(F_2) packed into 27 bits: bit 0 = a, bit 1 = b, bit 2 = c,
/// bits 3..10 = x, 11..18 = y, 19..26 = z (alpha coordinates, low bit first).
using PackedJordanF2 = std::uint32_t;

constexpr std::uint32_t kCensusSize = 1u << 27;

JordanElement<ZMod> unpack_f2(PackedJordanF2 v);
PackedJordanF2 pack_f2(const JordanElement<ZMod>& X);

/// 0: X = 0; 1: X x X = 0; 2: det X = 0; 3: det X != 0.
int rank_f2(PackedJordanF2 v);

/// Same classification through the generic Jordan arithmetic.
int rank_f2_generic(PackedJordanF2 v);

struct CensusCounts
{
    std::array<std::uint64_t, 4> rank{};
    double seconds = 0;

    std::uint64_t total() const { return rank[0] + rank[1] + rank[2] + rank[3]; }
    friend bool operator==(const CensusCounts& a, const CensusCounts& b) { return a.rank == b.rank; }
};

/// Exhaustive rank census of J(F_2). The parallel kernel splits on the z
/// coordinate; threads <= 0 keeps the OpenMP default.
CensusCounts census_f2(Exec exec = Exec::parallel, int threads = 0);

/// Element-by-element reference over the same bit layout; slow.
CensusCounts census_f2_reference();

/// p^12 (p-1)(p^5-1)(p^9-1)
Integer nonsingular_count(unsigned long p);

/// delta_2 (1 - 1/2) 2^27 / rank3; throws on disagreement with beta_2(0,0,0).
Rational beta_from_census(const CensusCounts& c);

/// Uniform sampling of J(F_3): nonsingular fraction with a 99% Wilson interval.
struct SampleReport
{
    std::uint64_t samples = 0, nonsingular = 0;
    double fraction = 0, expected = 0, low = 0, high = 0;
    bool consistent() const { return low <= expected && expected <= high; }
};

SampleReport census_f3_sample(std::uint64_t samples, std::uint64_t seed);

nlohmann::json to_json(const CensusCounts& c);

} // namespace heptalift
