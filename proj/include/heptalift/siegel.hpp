#pragma once

#include <utility>
#include <vector>

#include "heptalift/laurent.hpp"

namespace heptalift
{

/// Local Siegel series of p^m1 + p^(m1+m2) + p^(m1+m3); a polynomial in X
/// of degree 3m1+m2+m3 with constant term 1.
struct SiegelPoly
{
    unsigned long p = 2;
    int m1 = 0, m2 = 0, m3 = 0;
    LaurentQ poly{Var::X};

    int degree() const { return 3 * m1 + m2 + m3; }
};

/// Eight-term closed form over a single common denominator.
SiegelPoly f_poly(unsigned long p, int m1, int m2, int m3);

/// Independent route: the m1 = 0 base sum and the recursion in m1.
SiegelPoly f_poly_oracle(unsigned long p, int m1, int m2, int m3);

/// Siegel series from the divisors of any triple (sorted internally).
SiegelPoly f_poly_for_divisors(unsigned long p, int a1, int a2, int a3);

/// X^m f(X^-2)
LaurentQ tilde_f(const SiegelPoly& s);

/// X^-m f(X^2); equal to tilde_f by the functional equation.
LaurentQ tilde_f_alt(const SiegelPoly& s);

/// (j, c_j) for j = m, m-2, ..., with t = sum_{j>0} c_j (X^j + X^-j) + c_0.
std::vector<std::pair<int, Integer>> symmetric_coefficients(const LaurentQ& t, int m);

/// Inverse of symmetric_coefficients.
LaurentQ from_symmetric_coefficients(const std::vector<std::pair<int, Integer>>& c);

namespace detail
{
/// The recursion in m1 with switchable variants of its second coefficient
/// function; only the default variant reproduces the closed form.
struct KarelReading
{
    bool c1_den_plus4 = false; // (1 - p^4 X) instead of (1 - p^-4 X)
    bool c1_inv_power_m1 = false; // X^m1 instead of X^2m1 beside C1(X^-1)
};
LaurentQ karel_recursion(unsigned long p, int m1, int m2, int m3, KarelReading r);
} // namespace detail

} // namespace heptalift
