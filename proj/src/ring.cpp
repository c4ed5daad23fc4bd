#include "heptalift/ring.hpp"

#include <cctype>

namespace heptalift
{

namespace
{

std::int64_t reduce(std::int64_t v, std::int64_t m)
{
    v %= m;
    return v < 0 ? v + m : v;
}

} // namespace

ZMod::ZMod(std::int64_t v, std::int64_t m) : modulus_(m)
{
    if (m <= 0 || m >= (std::int64_t(1) << 62))
        throw std::invalid_argument("ZMod: modulus out of range");
    value_ = reduce(v, m);
}

ZMod::ZMod(const Integer& v, std::int64_t m) : modulus_(m)
{
    if (m <= 0 || m >= (std::int64_t(1) << 62))
        throw std::invalid_argument("ZMod: modulus out of range");
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
    value_ = r.get_si();
}

void ZMod::adopt(const ZMod& o)
{
    if (!o.bound())
        return;
    if (!bound())
    {
        modulus_ = o.modulus_;
        value_ = reduce(value_, modulus_);
    }
    else if (modulus_ != o.modulus_)
    {
        throw std::invalid_argument("ring mismatch: Z/" + std::to_string(modulus_) + " vs Z/" +
                                    std::to_string(o.modulus_));
    }
}

ZMod& ZMod::operator+=(const ZMod& o)
{
    adopt(o);
    if (!bound())
    {
        value_ += o.value_;
        return *this;
    }
    value_ = reduce(value_ + reduce(o.value_, modulus_), modulus_);
    return *this;
}

ZMod& ZMod::operator-=(const ZMod& o)
{
    adopt(o);
    if (!bound())
    {
        value_ -= o.value_;
        return *this;
    }
    value_ = reduce(value_ - reduce(o.value_, modulus_), modulus_);
    return *this;
}

ZMod& ZMod::operator*=(const ZMod& o)
{
    adopt(o);
    if (!bound())
    {
        value_ *= o.value_;
        return *this;
    }
    __int128 prod = static_cast<__int128>(value_) * reduce(o.value_, modulus_);
    value_ = static_cast<std::int64_t>(prod % modulus_);
    return *this;
}

ZMod ZMod::operator-() const
{
    ZMod r = *this;
    r.value_ = bound() ? reduce(-value_, modulus_) : -value_;
    return r;
}

bool operator==(const ZMod& a, const ZMod& b)
{
    ZMod d = a;
    d -= b;
    return d.is_zero();
}

bool ZMod::is_zero() const
{
    return value_ == 0;
}

ZMod ZMod::inverse() const
{
    if (!bound())
    {
        if (value_ == 1 || value_ == -1)
            return *this;
        throw ArithmeticError("ZMod: inverse of unbound non-unit");
    }
    // extended Euclid on (value, modulus)
    __int128 r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
    while (r1 != 0)
    {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1)
        throw ArithmeticError("ZMod: " + str() + " is not a unit");
    return ZMod(static_cast<std::int64_t>(s0 % modulus_), modulus_);
}

std::string ZMod::str() const
{
    if (!bound())
        return std::to_string(value_);
    return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

Integer half(const Integer& x)
{
    if (mpz_odd_p(x.get_mpz_t()))
        throw ArithmeticError("requires half-integral ring");
    Integer r = x / 2;
    return r;
}

Rational half(const Rational& x)
{
    Rational r = x / 2;
    return r;
}

ZMod half(const ZMod& x)
{
    if (!x.bound())
    {
        if (x.value() % 2 != 0)
            throw ArithmeticError("requires half-integral ring");
        return ZMod(x.value() / 2);
    }
    if (x.modulus() % 2 == 0)
        throw ArithmeticError("requires half-integral ring: 2 is not invertible mod " +
                              std::to_string(x.modulus()));
    return x * ZMod(2, x.modulus()).inverse();
}

Integer unit_inverse(const Integer& x)
{
    if (x == 1 || x == -1)
        return x;
    throw ArithmeticError("not a unit in Z: " + x.get_str());
}

Rational unit_inverse(const Rational& x)
{
    if (sgn(x) == 0)
        throw ArithmeticError("division by zero");
    Rational r = 1 / x;
    return r;
}

ZMod unit_inverse(const ZMod& x)
{
    return x.inverse();
}

std::string to_string(const Integer& x)
{
    return x.get_str();
}

std::string to_string(const Rational& x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const ZMod& x)
{
    return x.str();
}

Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos)
    {
        Rational r(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
        if (sgn(r.get_den()) == 0)
            throw std::invalid_argument("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos)
        return Rational(Integer(s, 10));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])) && !(i == 0 && (digits[i] == '-' || digits[i] == '+')))
            throw std::invalid_argument("malformed decimal '" + s + "'");
    if (digits == "-" || digits == "+" || digits.empty())
        throw std::invalid_argument("malformed decimal '" + s + "'");
    Rational r(Integer(digits[0] == '+' ? digits.substr(1) : digits, 10), integer_pow(10, frac));
    r.canonicalize();
    return r;
}

int valuation(const Integer& x, unsigned long p)
{
    if (sgn(x) == 0)
        throw ArithmeticError("valuation of zero");
    Integer t = x;
    int v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), p))
    {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
        ++v;
    }
    return v;
}

int valuation(const Rational& x, unsigned long p)
{
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Rational rational_pow(const Rational& base, long exponent)
{
    Rational r;
    Integer num, den;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    if (exponent < 0)
    {
        if (sgn(num) == 0)
            throw ArithmeticError("zero to a negative power");
        std::swap(num, den);
    }
    r = Rational(num, den);
    r.canonicalize();
    return r;
}

Integer integer_pow(unsigned long base, unsigned long exponent)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace heptalift
