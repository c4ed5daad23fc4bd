#pragma once

#include <array>
#include <string>
#include <vector>

#include "heptalift/ring.hpp"

namespace heptalift
{

/// Multiplication table of the integral order in the alpha basis.
struct StructureConstants
{
    /// mul[i][j][k]: k-th alpha coordinate of alpha_i * alpha_j
    std::array<std::array<std::array<int, 8>, 8>, 8> mul;
    /// conj[i][k]: k-th alpha coordinate of conj(alpha_i)
    std::array<std::array<int, 8>, 8> conj;
    std::array<int, 8> trace;
    /// gram[i][j] = Tr(alpha_i conj(alpha_j)); gram[i][i] = 2 N(alpha_i)
    std::array<std::array<int, 8>, 8> gram;
    /// basis2[i][k]: twice the k-th e-coordinate of alpha_i
    std::array<std::array<int, 8>, 8> basis2;
    /// nonzero entries of mul as (i, j, k, value), ordered by i then j
    std::vector<std::array<int, 4>> mul_terms;
};

/// Built on first use from the Fano-line convention and checked for closure.
const StructureConstants& structure_constants();

/// Product of two e-basis units: e_i e_j = sign * e_k.
struct UnitProduct
{
    int sign;
    int index;
};
UnitProduct e_product(int i, int j);

/// Determinant of the trace-pairing Gram matrix (computed exactly).
Integer gram_determinant();

namespace detail
{
/// out += m x y
template <class R>
void add_product(R& out, const R& x, const R& y, int m)
{
    if (m == 1)
        out += x * y;
    else if (m == -1)
        out -= x * y;
    else
        out += x * y * R(m);
}

// gmpxx builds a temporary for x * y here; addmul avoids the allocation
inline void add_product(Integer& out, const Integer& x, const Integer& y, int m)
{
    if (m == 1)
        mpz_addmul(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    else if (m == -1)
        mpz_submul(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    else
        out += x * y * m;
}
} // namespace detail

template <class R>
class Octonion
{
public:
    Octonion() { c_.fill(R(0)); }
    explicit Octonion(const std::array<R, 8>& coords) : c_(coords) {}

    /// alpha_i
    static Octonion basis(int i)
    {
        Octonion r;
        r.c_[static_cast<std::size_t>(i)] = R(1);
        return r;
    }

    static Octonion scalar(const R& s)
    {
        Octonion r;
        r.c_[0] = s;
        return r;
    }

    /// From twice the e-basis coordinates; they must describe an order element.
    static Octonion from_e2(const std::array<long, 8>& e2);

    /// e_i
    static Octonion e(int i)
    {
        std::array<long, 8> e2{};
        e2[static_cast<std::size_t>(i)] = 2;
        return from_e2(e2);
    }

    const std::array<R, 8>& coords() const noexcept { return c_; }
    const R& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    R& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    Octonion& operator+=(const Octonion& o)
    {
        for (std::size_t i = 0; i < 8; ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    Octonion& operator-=(const Octonion& o)
    {
        for (std::size_t i = 0; i < 8; ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    Octonion operator-() const
    {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i)
            r.c_[i] = -c_[i];
        return r;
    }
    friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
    friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }

    friend Octonion operator*(const Octonion& a, const Octonion& b)
    {
        const auto& sc = structure_constants();
        Octonion r;
        for (const auto& [i, j, k, m] : sc.mul_terms)
        {
            const R& x = a.c_[static_cast<std::size_t>(i)];
            const R& y = b.c_[static_cast<std::size_t>(j)];
            if (heptalift::is_zero(x) || heptalift::is_zero(y))
                continue;
            detail::add_product(r.c_[static_cast<std::size_t>(k)], x, y, m);
        }
        return r;
    }

    Octonion scaled(const R& s) const
    {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i)
            r.c_[i] = c_[i] * s;
        return r;
    }

    Octonion conj() const
    {
        const auto& sc = structure_constants();
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i)
        {
            if (heptalift::is_zero(c_[i]))
                continue;
            for (std::size_t k = 0; k < 8; ++k)
                if (sc.conj[i][k] != 0)
                    r.c_[k] += c_[i] * R(sc.conj[i][k]);
        }
        return r;
    }

    R trace() const
    {
        const auto& sc = structure_constants();
        R t(0);
        for (std::size_t i = 0; i < 8; ++i)
            if (sc.trace[i] != 0)
                t += c_[i] * R(sc.trace[i]);
        return t;
    }

    /// N(x) = x conj(x), from the Gram matrix without division.
    R norm() const
    {
        const auto& sc = structure_constants();
        R n(0);
        for (std::size_t i = 0; i < 8; ++i)
        {
            if (heptalift::is_zero(c_[i]))
                continue;
            n += c_[i] * c_[i] * R(sc.gram[i][i] / 2);
            for (std::size_t j = i + 1; j < 8; ++j)
                if (sc.gram[i][j] != 0)
                    n += c_[i] * c_[j] * R(sc.gram[i][j]);
        }
        return n;
    }

    /// Tr(x conj(y)) = bilinear form of the norm.
    R pairing(const Octonion& y) const
    {
        const auto& sc = structure_constants();
        R s(0);
        for (std::size_t i = 0; i < 8; ++i)
        {
            if (heptalift::is_zero(c_[i]))
                continue;
            for (std::size_t j = 0; j < 8; ++j)
                if (sc.gram[i][j] != 0)
                    s += c_[i] * y.c_[j] * R(sc.gram[i][j]);
        }
        return s;
    }

    bool is_zero() const
    {
        for (const auto& v : c_)
            if (!heptalift::is_zero(v))
                return false;
        return true;
    }

    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < 8; ++i)
            s += (i ? "," : "") + to_string(c_[i]);
        return s + "]";
    }

private:
    std::array<R, 8> c_;
};

/// Coordinates of an order element in the alpha basis from twice its
/// e-coordinates; throws if the element is not in the order.
std::array<long, 8> alpha_from_e2(const std::array<long, 8>& e2);

template <class R>
Octonion<R> Octonion<R>::from_e2(const std::array<long, 8>& e2)
{
    auto a = alpha_from_e2(e2);
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i)
        r.c_[i] = R(a[i]);
    return r;
}

/// Twice the e-coordinates of an integral octonion.
std::array<Integer, 8> e2_coords(const Octonion<Integer>& x);

template <class R>
Octonion<R> map_coords(const Octonion<Integer>& x, std::int64_t modulus)
{
    std::array<R, 8> c;
    for (std::size_t i = 0; i < 8; ++i)
        c[i] = R(x[static_cast<int>(i)], modulus);
    return Octonion<R>(c);
}

} // namespace heptalift
