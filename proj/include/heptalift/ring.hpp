#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace heptalift
{

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an exact computation hits a state that the mathematics
/// rules out (non-integral result, failed exact division, ...).
class ArithmeticError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Residue class modulo m (m < 2^62).
///
/// A value constructed from a plain integer carries modulus 0 ("unbound")
/// and adopts the modulus of the first bound operand it meets. This lets
/// generic code write `R(0)` and `R(1)` for every coefficient ring.
class ZMod
{
public:
    ZMod() = default;
    ZMod(long v) : value_(v), modulus_(0) {}
    ZMod(std::int64_t v, std::int64_t m);
    ZMod(const Integer& v, std::int64_t m);

    std::int64_t value() const noexcept { return value_; }
    std::int64_t modulus() const noexcept { return modulus_; }
    bool bound() const noexcept { return modulus_ != 0; }

    ZMod& operator+=(const ZMod& o);
    ZMod& operator-=(const ZMod& o);
    ZMod& operator*=(const ZMod& o);
    ZMod operator-() const;

    friend ZMod operator+(ZMod a, const ZMod& b) { return a += b; }
    friend ZMod operator-(ZMod a, const ZMod& b) { return a -= b; }
    friend ZMod operator*(ZMod a, const ZMod& b) { return a *= b; }
    friend bool operator==(const ZMod& a, const ZMod& b);

    bool is_zero() const;
    /// Multiplicative inverse; throws if the value is not a unit.
    ZMod inverse() const;
    std::string str() const;

private:
    void adopt(const ZMod& o);

    std::int64_t value_ = 0;
    std::int64_t modulus_ = 0;
};

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const ZMod& x) { return x.is_zero(); }

/// x/2 in the ring; over Z it must be exact.
Integer half(const Integer& x);
Rational half(const Rational& x);
ZMod half(const ZMod& x);

/// Multiplicative inverse of a unit.
Integer unit_inverse(const Integer& x);
Rational unit_inverse(const Rational& x);
ZMod unit_inverse(const ZMod& x);

std::string to_string(const Integer& x);
/// Always "num/den", also for integers.
std::string to_string(const Rational& x);
std::string to_string(const ZMod& x);

/// Parses "n", "n/d" or a finite decimal such as "-0.125".
Rational parse_rational(const std::string& s);

/// Exact p-adic valuation of a nonzero integer.
int valuation(const Integer& x, unsigned long p);
int valuation(const Rational& x, unsigned long p);

Rational rational_pow(const Rational& base, long exponent);
Integer integer_pow(unsigned long base, unsigned long exponent);
Integer factorial(unsigned long n);

} // namespace heptalift
