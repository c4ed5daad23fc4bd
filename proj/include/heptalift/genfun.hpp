#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "heptalift/series.hpp"
#include "heptalift/special_value.hpp"

namespace heptalift
{

/// sum over exponent triples with a1+a2+a3 = m of tilde f^2 / beta_p
LaurentQ lambda_p(unsigned long p, int m);

/// Polynomial in A, B, C with rational coefficients.
using MPoly = std::map<std::array<int, 3>, Rational>;

/// Coefficients of t^0..t^M of P(A,B,C,t).
using PSeries = std::vector<MPoly>;

/// Expansion of the closed form of P.
PSeries P_closed(unsigned long p, int M);

/// The defining sum over (m1, m2 <= m3) of t^{3m1+m2+m3} A^m1 B^m2 C^m3 / beta.
PSeries P_direct(unsigned long p, int M);

/// The closed form of H_p: numerator and denominator factors as
/// polynomials in t with Laurent-in-X coefficients, and the constant 1/c1.
struct HpClosedForm
{
    unsigned long p;
    Rational prefactor;
    std::vector<LaurentPoly<LaurentQ>> numerator;
    std::vector<LaurentPoly<LaurentQ>> denominator;
};

HpClosedForm hp_closed_form(unsigned long p);

/// Closed form expanded through t^M.
TruncSeries<LaurentQ> hp_closed_series(unsigned long p, int M);

/// Eight-term expansion tilde f = sum_i A_i X_i^m1 Y_i^m2 Z_i^m3 with
/// A_i = N_i / D over the common denominator D(X) = D(1/X).
struct HpTable
{
    std::array<LaurentQ, 8> N;
    LaurentQ D{Var::X};
    /// X_i, Y_i, Z_i as monomials c X^e
    std::array<std::array<std::pair<Rational, int>, 3>, 8> XYZ;
};

HpTable hp_table(unsigned long p);

/// tilde f from the eight-term table (exact division by D).
LaurentQ tilde_f_from_table(unsigned long p, int m1, int m2, int m3);

enum class Exec
{
    serial,
    parallel,
};

struct HpReport
{
    unsigned long p = 2;
    int M = 0;
    bool ok = true;
    int first_mismatch = -1;
    std::string failed_route;
    /// closed-form coefficients, one per power of t
    std::vector<LaurentQ> coefficients;
};

/// Compares the closed form of H_p with the lambda sum and with the
/// 64-term route through t^M.
HpReport hp_verify(unsigned long p, int M, Exec exec = Exec::parallel, bool table_route = true);

/// Rewrites H_p at t = p^{2k-s} as
///   c1^-1 prod_i (1 - p^{-4i-6} t^2) / prod_i (1 - q_i t)^2 (1 - q_i X^2 t)(1 - q_i X^-2 t)
/// with q_i = p^{3-4i}, and checks equality with the closed form.
struct RsEulerReport
{
    unsigned long p;
    bool ok;
    std::vector<std::string> zeta_inverse; // (1 - p^{-4i-6} t^2)
    std::vector<std::string> zeta_sym2;    // q_i for zeta(s-2k+4i-3) L(s-2k+4i-3, Sym^2)
};

RsEulerReport rs_euler_check(unsigned long p);

/// Residue of R(s, F_f, F_f) at s = 2k.
SpecialValue rs_closed_residue(int k);

/// 2^{-6s} pi^{12-3s} Gamma(s) Gamma(s-4) Gamma(s-8), s integral or half-integral > 8.
SpecialValue gamma_RS(const Rational& s);

Rational gamma_k(int k);

/// gamma_k by dividing the residue by the weight-2k residue prefactor.
Rational gamma_k_derived(int k);

} // namespace heptalift
