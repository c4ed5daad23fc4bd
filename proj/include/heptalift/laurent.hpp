#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "heptalift/ring.hpp"

namespace heptalift
{

enum class Var : char
{
    X = 'X',
    t = 't',
    u = 'u',
    A = 'A',
    B = 'B',
    C = 'C',
};

template <class Coeff>
class LaurentPoly;

template <class Coeff>
bool is_zero(const LaurentPoly<Coeff>& p);

namespace detail
{
template <class T>
struct is_laurent : std::false_type
{
};
template <class T>
struct is_laurent<LaurentPoly<T>> : std::true_type
{
};
} // namespace detail

/// Finite Laurent polynomial sum_e c_e v^e over a coefficient ring.
///
/// The coefficient may itself be a LaurentPoly in another variable, which is
/// how series in t with Laurent-in-X coefficients are built.
/// Zero coefficients are never stored.
template <class Coeff>
class LaurentPoly
{
public:
    using coeff_type = Coeff;
    using map_type = std::map<int, Coeff>;

    LaurentPoly() = default;
    explicit LaurentPoly(Var v) : var_(v) {}
    LaurentPoly(Var v, Coeff constant) : var_(v) { set(0, std::move(constant)); }

    /// c v^e
    static LaurentPoly monomial(Var v, Coeff c, int e)
    {
        LaurentPoly r(v);
        r.set(e, std::move(c));
        return r;
    }

    Var var() const noexcept { return var_; }
    const map_type& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    Coeff coeff(int e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero_coeff() : it->second;
    }

    void set(int e, Coeff c)
    {
        if (heptalift::is_zero(c))
            terms_.erase(e);
        else
            terms_[e] = std::move(c);
    }

    void add_to(int e, const Coeff& c)
    {
        if (heptalift::is_zero(c))
            return;
        auto it = terms_.find(e);
        if (it == terms_.end())
        {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (heptalift::is_zero(it->second))
            terms_.erase(it);
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_to(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
        {
            Coeff n = -c;
            add_to(e, n);
        }
        return *this;
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_)
        {
            Coeff n = -c;
            r.terms_.emplace(e, std::move(n));
        }
        return r;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly r(a.var_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
            {
                Coeff prod = ca * cb;
                r.add_to(ea + eb, prod);
            }
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Multiply every coefficient by a scalar of the coefficient ring.
    LaurentPoly scaled(const Coeff& s) const
    {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_)
        {
            Coeff prod = c * s;
            r.set(e, std::move(prod));
        }
        return r;
    }

    /// Multiply by v^k.
    LaurentPoly shifted(int k) const
    {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e + k, c);
        return r;
    }

    /// v -> v^k (k may be negative).
    LaurentPoly substitute_power(int k) const
    {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_)
            r.add_to(e * k, c);
        return r;
    }

    LaurentPoly pow(unsigned n) const
    {
        LaurentPoly r(var_, one_coeff());
        LaurentPoly b = *this;
        while (n)
        {
            if (n & 1u)
                r *= b;
            n >>= 1u;
            if (n)
                b *= b;
        }
        return r;
    }

    /// Horner-free evaluation at a value of the coefficient ring.
    template <class Value>
    Value evaluate(const Value& x) const
    {
        Value acc = Value(0);
        for (const auto& [e, c] : terms_)
        {
            Value term = Value(c);
            if (e >= 0)
                for (int i = 0; i < e; ++i)
                    term *= x;
            else
                for (int i = 0; i < -e; ++i)
                    term /= x;
            acc += term;
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << coeff_str(it->second) << ")";
            if (it->first != 0)
                os << "*" << static_cast<char>(var_) << "^" << it->first;
        }
        return os.str();
    }

private:
    static Coeff zero_coeff()
    {
        if constexpr (detail::is_laurent<Coeff>::value)
            return Coeff();
        else
            return Coeff(0);
    }
    static Coeff one_coeff()
    {
        if constexpr (detail::is_laurent<Coeff>::value)
            return Coeff::one_like();
        else
            return Coeff(1);
    }
    static std::string coeff_str(const Coeff& c)
    {
        if constexpr (detail::is_laurent<Coeff>::value)
            return c.str();
        else
            return to_string(c);
    }

public:
    /// 1 in this ring. Nested coefficient variables default to X.
    static LaurentPoly one_like(Var v = Var::X) { return LaurentPoly(v, one_coeff()); }

private:
    Var var_ = Var::X;
    map_type terms_;
};

template <class Coeff>
bool is_zero(const LaurentPoly<Coeff>& p)
{
    return p.is_zero();
}

using LaurentQ = LaurentPoly<Rational>;

/// Inverse of a unit: a nonzero rational, or a single-term Laurent polynomial
/// with unit coefficient.
inline Rational invert_unit(const Rational& c)
{
    if (sgn(c) == 0)
        throw ArithmeticError("not a unit series");
    Rational r = 1 / c;
    return r;
}

template <class Coeff>
LaurentPoly<Coeff> invert_unit(const LaurentPoly<Coeff>& c)
{
    if (c.size() != 1)
        throw ArithmeticError("not a unit series");
    const auto& [e, k] = *c.terms().begin();
    return LaurentPoly<Coeff>::monomial(c.var(), invert_unit(k), -e);
}

/// Evaluate a Laurent polynomial with rational coefficients at a rational
/// point exactly.
inline Rational evaluate(const LaurentQ& p, const Rational& x)
{
    Rational acc = 0;
    for (const auto& [e, c] : p.terms())
        acc += c * rational_pow(x, e);
    return acc;
}

} // namespace heptalift
