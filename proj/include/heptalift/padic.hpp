#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heptalift/jordan.hpp"

namespace heptalift
{

/// Exponents a1 <= a2 <= a3 of the diagonal form p^a1 + p^a2 + p^a3.
struct ElemDivisors
{
    unsigned long p = 2;
    int a1 = 0, a2 = 0, a3 = 0;

    int sum() const { return a1 + a2 + a3; }
    std::array<int, 3> as_array() const { return {a1, a2, a3}; }
    friend bool operator==(const ElemDivisors& l, const ElemDivisors& r)
    {
        return l.p == r.p && l.a1 == r.a1 && l.a2 == r.a2 && l.a3 == r.a3;
    }
    std::string str() const;
};

/// Sorts the exponents.
ElemDivisors make_divisors(unsigned long p, int a, int b, int c);

/// Elementary divisors of a nonsingular T at p, by reduction modulo p^N.
/// N defaults to ord_p(det T) + 1.
ElemDivisors elementary_divisors(const JordanElement<Integer>& T, unsigned long p,
                                 std::optional<int> precision = std::nullopt);

/// Prime factorization of a nonzero integer (sign ignored).
std::map<Integer, int> factor_integer(const Integer& n);

/// Elementary divisors at every prime dividing det T.
std::map<unsigned long, ElemDivisors> genus_invariants(const JordanElement<Integer>& T);

bool is_prime(unsigned long p);

} // namespace heptalift
