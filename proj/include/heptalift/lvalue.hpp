#pragma once

#include <mpfr.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heptalift/genfun.hpp"
#include "heptalift/lift.hpp"

namespace heptalift
{

/// MPFR value with an absolute error bound.
class BigFloat
{
public:
    explicit BigFloat(mpfr_prec_t prec = 128);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec);

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    /// absolute error bound
    double err = 0;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with the given number of significant digits.
    std::string str(int digits) const;
    /// Significant decimal digits supported by the error bound.
    int correct_digits() const;

    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

private:
    mpfr_t v_;
    bool live_ = false;
};

/// Coefficients b(1..N) of L(s, Sym^2 pi_f) in the analytic normalization;
/// index 0 is unused.
std::vector<Rational> sym2_dirichlet_coeffs(const EigenData& e, std::size_t N);

/// d_3(n), the number of ordered factorizations into three factors.
std::vector<unsigned> divisor3_table(std::size_t N);

struct LValueOptions
{
    int digits = 20;
    /// scale in the theta splitting; the result is independent of it
    double A = 1.0;
    Exec exec = Exec::parallel;
};

/// L(s, Sym^2 pi_f) from the completed function
///   Lambda(s) = Gamma_R(s+1) Gamma_C(s+2k-9) L(s) = Lambda(1-s)
/// by the smoothed series with an incomplete-Gamma kernel.
BigFloat sym2_lvalue(const EigenData& e, int s, const LValueOptions& opt = {});

/// Number of Dirichlet terms the smoothed series needs.
std::size_t sym2_terms_needed(int k, int s, int digits, double A = 1.0);

/// Truncated Dirichlet sum over n <= N, with a tail estimate.
BigFloat sym2_lvalue_plain(const EigenData& e, int s, std::size_t N, int digits);

/// Euler product over p <= P.
BigFloat sym2_euler_product(const EigenData& e, int s, unsigned long P, int digits);

struct PeriodResult
{
    BigFloat value;
    Rational gamma_k;
    std::array<BigFloat, 3> lvalues; // s = 1, 5, 9
    int pi_power;
};

/// gamma_k pi^{-6k-3} L(1) L(5) L(9)
PeriodResult period(int k, const EigenData& e, int digits, Exec exec = Exec::parallel);

struct ProbeResult
{
    std::optional<Rational> r5, r9;
    std::vector<int> digits;
    std::vector<std::pair<BigFloat, BigFloat>> rho; // (rho5, rho9) per precision
};

/// rho5 = L(5)/(L(1) pi^8), rho9 = L(9)/(L(1) pi^16), reconstructed at each
/// precision; a rational is reported only when all precisions agree.
/// `perturb_l1` scales L(1) by (1 + perturb_l1), a negative control.
ProbeResult rationality_probe(const EigenData& e, const std::vector<int>& digits, double perturb_l1 = 0,
                              Exec exec = Exec::parallel);

/// Rational reconstruction of a BigFloat, tolerance |x| 10^{-(digits-2)}.
std::optional<Rational> reconstruct(const BigFloat& x, int digits);

nlohmann::json to_json(const BigFloat& x, int digits);

} // namespace heptalift
