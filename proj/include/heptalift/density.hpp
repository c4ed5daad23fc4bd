#pragma once

#include <utility>
#include <vector>

#include "heptalift/padic.hpp"
#include "heptalift/special_value.hpp"

namespace heptalift
{

struct DensityConstants
{
    unsigned long p;
    Rational c1, c2, c3, delta;
};

DensityConstants density_constants(unsigned long p);

Rational beta_p(const ElemDivisors& d);
Rational alpha_p(const ElemDivisors& d);

struct IgusaReport
{
    bool ok = true;
    int first_mismatch = -1;
    /// (sum over classes of 1/beta, closed form) per power of u
    std::vector<std::pair<Rational, Rational>> coefficients;
};

/// Compares sum_m sum_{a1+a2+a3=m} u^m / beta_p with
/// 1 / (c1 (1 - u/p)(1 - u/p^5)(1 - u/p^9)) through u^M.
IgusaReport igusa_verify(unsigned long p, int M);

/// (#M(Z/p^n), #M'(Z/p^n))
std::pair<Integer, Integer> group_orders(unsigned long p, int n);

/// c * zeta(2) zeta(6) zeta(8) zeta(12) = 691 / (2^15 3^6 5^2 7^2 13)
Rational mass_constant();

/// c = 5! 7! 11! / (2 pi)^28
SpecialValue constant_c();

/// c (det T)^9 / prod_p beta_p(T), for positive definite T.
Rational mass(const JordanElement<Integer>& T);

} // namespace heptalift
