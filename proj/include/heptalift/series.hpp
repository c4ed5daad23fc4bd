#pragma once

#include <algorithm>
#include <vector>

#include "heptalift/laurent.hpp"

namespace heptalift
{

/// Power series c_0 + c_1 v + ... + c_M v^M + O(v^{M+1}).
template <class Coeff>
class TruncSeries
{
public:
    TruncSeries() = default;
    TruncSeries(Var v, int order) : var_(v), coeffs_(static_cast<std::size_t>(order) + 1, zero()) {}

    static TruncSeries from_poly(const LaurentPoly<Coeff>& p, int order)
    {
        TruncSeries s(p.var(), order);
        for (const auto& [e, c] : p.terms())
        {
            if (e < 0)
                throw ArithmeticError("negative exponent in power series");
            if (e <= order)
                s.coeffs_[static_cast<std::size_t>(e)] = c;
        }
        return s;
    }

    Var var() const noexcept { return var_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Coeff& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    Coeff& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

    TruncSeries& operator+=(const TruncSeries& o)
    {
        truncate(std::min(order(), o.order()));
        for (int i = 0; i <= order(); ++i)
            (*this)[i] += o[i];
        return *this;
    }

    TruncSeries& operator-=(const TruncSeries& o)
    {
        truncate(std::min(order(), o.order()));
        for (int i = 0; i <= order(); ++i)
            (*this)[i] -= o[i];
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        int m = std::min(a.order(), b.order());
        TruncSeries r(a.var_, m);
        for (int i = 0; i <= m; ++i)
        {
            if (heptalift::is_zero(a[i]))
                continue;
            for (int j = 0; i + j <= m; ++j)
                if (!heptalift::is_zero(b[j]))
                    r[i + j] += a[i] * b[j];
        }
        return r;
    }

    TruncSeries scaled(const Coeff& s) const
    {
        TruncSeries r = *this;
        for (auto& c : r.coeffs_)
            c = c * s;
        return r;
    }

    /// Multiplicative inverse; the constant term must be a unit.
    TruncSeries inverse() const
    {
        Coeff c0inv = invert_unit(coeffs_.front());
        TruncSeries r(var_, order());
        r[0] = c0inv;
        for (int n = 1; n <= order(); ++n)
        {
            Coeff acc = zero();
            for (int i = 1; i <= n; ++i)
                if (!heptalift::is_zero((*this)[i]))
                    acc += (*this)[i] * r[n - i];
            Coeff neg = -acc;
            r[n] = neg * c0inv;
        }
        return r;
    }

    void truncate(int m)
    {
        if (m < order())
            coeffs_.resize(static_cast<std::size_t>(m) + 1);
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b)
    {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }

private:
    static Coeff zero()
    {
        if constexpr (detail::is_laurent<Coeff>::value)
            return Coeff();
        else
            return Coeff(0);
    }

    Var var_ = Var::t;
    std::vector<Coeff> coeffs_;
};

/// numer / prod(denoms) expanded to order M.
template <class Coeff>
TruncSeries<Coeff> ratfun_expand(const LaurentPoly<Coeff>& numer, const std::vector<LaurentPoly<Coeff>>& denoms, int M)
{
    TruncSeries<Coeff> s = TruncSeries<Coeff>::from_poly(numer, M);
    for (const auto& d : denoms)
        s = s * TruncSeries<Coeff>::from_poly(d, M).inverse();
    return s;
}

} // namespace heptalift
