#pragma once

#include "heptalift/laurent.hpp"

namespace heptalift
{

/// Quotient and remainder of Laurent polynomials in one variable, after
/// clearing the lowest powers of the variable from both sides.
struct DivResult
{
    LaurentQ quotient;
    LaurentQ remainder;
};

DivResult divmod(const LaurentQ& a, const LaurentQ& b);

/// a / b, throwing ArithmeticError with `what` if b does not divide a.
LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b, const char* what = "inexact division");

/// Unnormalized quotient num/den of Laurent polynomials over Q. No gcd is
/// taken; exactness is recovered by divide_exact at the end of a computation.
class RatFun
{
public:
    RatFun() : num_(Var::X), den_(Var::X, Rational(1)) {}
    RatFun(LaurentQ num) : num_(std::move(num)), den_(num_.var(), Rational(1)) {}
    RatFun(LaurentQ num, LaurentQ den);

    const LaurentQ& num() const noexcept { return num_; }
    const LaurentQ& den() const noexcept { return den_; }

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    RatFun operator-() const { return RatFun(-num_, den_); }

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

    /// v -> v^{-1}
    RatFun inverted_variable() const;

    /// The Laurent polynomial this fraction equals; throws if it is not one.
    LaurentQ to_laurent(const char* what = "not a Laurent polynomial") const;

private:
    LaurentQ num_;
    LaurentQ den_;
};

/// 1 - c v^e
LaurentQ one_minus(const Rational& c, int e, Var v = Var::X);

} // namespace heptalift
