#include "heptalift/ratfun.hpp"

namespace heptalift
{

DivResult divmod(const LaurentQ& a, const LaurentQ& b)
{
    if (b.is_zero())
        throw ArithmeticError("division by zero polynomial");
    Var v = a.is_zero() ? b.var() : a.var();
    // a / b = (a X^-sa) / (b X^-sb) * X^(sa-sb)
    int sa = a.min_exponent(), sb = b.min_exponent();
    LaurentQ r = a.shifted(-sa);
    LaurentQ d = b.shifted(-sb);
    int dd = d.max_exponent();
    Rational lead = d.coeff(dd);
    LaurentQ q(v);
    while (!r.is_zero() && r.max_exponent() >= dd)
    {
        int e = r.max_exponent() - dd;
        Rational c = r.coeff(r.max_exponent()) / lead;
        q.set(e, c);
        for (const auto& [de, dc] : d.terms())
        {
            Rational sub = -(dc * c);
            r.add_to(de + e, sub);
        }
    }
    return {q.shifted(sa - sb), r.shifted(sa)};
}

LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b, const char* what)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw ArithmeticError(what);
    return q;
}

RatFun::RatFun(LaurentQ num, LaurentQ den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw ArithmeticError("zero denominator");
}

RatFun& RatFun::operator+=(const RatFun& o)
{
    if (den_ == o.den_)
    {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o)
{
    return *this += -o;
}

RatFun& RatFun::operator*=(const RatFun& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o)
{
    if (o.num_.is_zero())
        throw ArithmeticError("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    return *this;
}

RatFun RatFun::inverted_variable() const
{
    return RatFun(num_.substitute_power(-1), den_.substitute_power(-1));
}

LaurentQ RatFun::to_laurent(const char* what) const
{
    return divide_exact(num_, den_, what);
}

LaurentQ one_minus(const Rational& c, int e, Var v)
{
    LaurentQ r(v, Rational(1));
    Rational n = -c;
    r.add_to(e, n);
    return r;
}

} // namespace heptalift
