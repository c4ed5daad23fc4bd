#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "heptalift/padic.hpp"

namespace heptalift
{

/// tau(1..N) from q prod (1 - q^n)^24; index 0 is unused.
std::vector<Integer> tau_table(std::size_t N);

/// Hecke eigenvalues a_f(p) of f in S_{2k-8}(SL_2(Z)).
struct EigenData
{
    int k = 10;
    std::map<unsigned long, Integer> ap;

    int weight() const { return 2 * k - 8; }
    /// w = 2k - 9
    int motivic_weight() const { return 2 * k - 9; }
    const Integer& at(unsigned long p) const;
    unsigned long max_prime() const { return ap.empty() ? 0 : ap.rbegin()->first; }
    /// true when every prime up to n is present
    bool covers(unsigned long n) const;
};

/// f = Delta (k = 10), primes up to N.
EigenData eigen_delta(unsigned long N);

/// CSV with header "p,a_p". Checks the Deligne bound a_p^2 <= 4 p^w exactly.
EigenData eigen_from_csv(const std::string& path, int k);

/// Throws if some a_p violates the Deligne bound.
void deligne_check(const EigenData& e);

std::vector<unsigned long> primes_up_to(unsigned long n);

/// t_j = p^{jw/2}(alpha^j + alpha^-j), j = 0..jmax
std::vector<Integer> satake_power_sums(const Integer& ap, unsigned long p, int k, int jmax);

/// Local factor at p of the lift coefficient, with det^{w/2} distributed in.
Rational local_lift_factor(const ElemDivisors& d, const EigenData& e);

/// a_{F_f}(T) from the genus invariants alone.
Rational lift_coefficient(const std::map<unsigned long, ElemDivisors>& genus, const EigenData& e);

/// a_{F_f}(T) for positive definite T.
Rational fourier_coeff(const JordanElement<Integer>& T, const EigenData& e);

/// One row per determinant d <= max_det and per choice of divisors at each
/// p | d; ordered by d, then by the divisors.
struct LiftRow
{
    Integer det;
    std::map<unsigned long, ElemDivisors> genus;
    Rational coefficient;
};

std::vector<LiftRow> lift_table(const EigenData& e, unsigned long max_det);
nlohmann::json to_json(const LiftRow& r);

/// a + b sqrt(d)
struct Surd
{
    Rational a, b;
    unsigned long d = 1;

    Surd() = default;
    Surd(Rational a_, Rational b_, unsigned long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {}
    Surd(const Rational& r) : a(r), b(0) {}

    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y);
    friend Surd operator*(const Surd& x, const Surd& y);
    friend bool operator==(const Surd& x, const Surd& y) { return x.a == y.a && x.b == y.b; }
    std::string str() const;
};

/// Polynomial in x = p^{-s}, constant term first.
using SurdPoly = std::vector<Surd>;

struct LocalFactors
{
    unsigned long p;
    SurdPoly sym2; ///< (1 - a^2 x)(1 - x)(1 - a^-2 x)
    SurdPoly sym3; ///< (1 - a^3 x)(1 - a x)(1 - a^-1 x)(1 - a^-3 x)
    /// Sym^3 factor, then L(s+i) for i = -4..4, then i = -8..8
    std::vector<SurdPoly> std56;
    int std56_degree() const;
};

/// Inverse local factors from u = alpha + alpha^-1.
LocalFactors local_L_factors_from_trace(unsigned long p, const Surd& u);
LocalFactors local_L_factors(unsigned long p, const Integer& ap, int k);

/// u = a_p p^{-w/2} as an element of Q(sqrt p)
Surd satake_trace(const Integer& ap, unsigned long p, int k);

} // namespace heptalift
