#include "heptalift/octonion.hpp"

#include <stdexcept>

namespace heptalift
{

namespace
{

using Vec8Q = std::array<Rational, 8>;

// twice the e-coordinates of alpha_0 .. alpha_7
constexpr int kBasis2[8][8] = {
    {2, 0, 0, 0, 0, 0, 0, 0},
    {0, 2, 0, 0, 0, 0, 0, 0},
    {0, 0, 2, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, -2, 0, 0, 0},
    {0, 1, 1, 1, -1, 0, 0, 0},
    {-1, -1, 0, 0, -1, 1, 0, 0},
    {-1, 1, -1, 0, 0, 0, 1, 0},
    {-1, 0, 1, 0, 1, 0, 0, 1},
};

int fano(int n)
{
    return ((n - 1) % 7 + 7) % 7 + 1;
}

std::array<std::array<UnitProduct, 8>, 8> build_units()
{
    std::array<std::array<UnitProduct, 8>, 8> t{};
    for (int j = 0; j < 8; ++j)
    {
        t[0][j] = {1, j};
        t[j][0] = {1, j};
    }
    for (int i = 1; i < 8; ++i)
        t[i][i] = {-1, 0};
    for (int i = 1; i < 8; ++i)
    {
        int a = i, b = fano(i + 1), c = fano(i + 3);
        t[a][b] = {1, c};
        t[b][c] = {1, a};
        t[c][a] = {1, b};
        t[b][a] = {-1, c};
        t[c][b] = {-1, a};
        t[a][c] = {-1, b};
    }
    return t;
}

const std::array<std::array<UnitProduct, 8>, 8>& units()
{
    static const auto t = build_units();
    return t;
}

Vec8Q e_mul(const Vec8Q& x, const Vec8Q& y)
{
    Vec8Q r;
    r.fill(Rational(0));
    for (int i = 0; i < 8; ++i)
    {
        if (sgn(x[i]) == 0)
            continue;
        for (int j = 0; j < 8; ++j)
        {
            if (sgn(y[j]) == 0)
                continue;
            auto u = units()[i][j];
            r[u.index] += u.sign * x[i] * y[j];
        }
    }
    return r;
}

// Solves sum_i a_i basis_i = v over Q.
Vec8Q to_alpha(const Vec8Q& v)
{
    std::array<std::array<Rational, 9>, 8> m;
    for (int r = 0; r < 8; ++r)
    {
        for (int c = 0; c < 8; ++c)
            m[r][c] = Rational(kBasis2[c][r], 2);
        m[r][8] = v[r];
    }
    for (auto& row : m)
        for (auto& e : row)
            e.canonicalize();
    for (int col = 0; col < 8; ++col)
    {
        int piv = col;
        while (sgn(m[piv][col]) == 0)
            ++piv;
        std::swap(m[piv], m[col]);
        Rational inv = 1 / m[col][col];
        for (auto& e : m[col])
            e *= inv;
        for (int r = 0; r < 8; ++r)
        {
            if (r == col || sgn(m[r][col]) == 0)
                continue;
            Rational f = m[r][col];
            for (int c = 0; c < 9; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    Vec8Q a;
    for (int r = 0; r < 8; ++r)
        a[r] = m[r][8];
    return a;
}

Vec8Q basis_e(int i)
{
    Vec8Q v;
    for (int k = 0; k < 8; ++k)
    {
        v[k] = Rational(kBasis2[i][k], 2);
        v[k].canonicalize();
    }
    return v;
}

std::array<int, 8> integral(const Vec8Q& a, const char* what)
{
    std::array<int, 8> r{};
    for (int k = 0; k < 8; ++k)
    {
        if (a[k].get_den() != 1)
            throw ArithmeticError(what);
        r[k] = static_cast<int>(a[k].get_num().get_si());
    }
    return r;
}

StructureConstants build()
{
    StructureConstants sc{};
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k)
            sc.basis2[i][k] = kBasis2[i][k];
    for (int i = 0; i < 8; ++i)
    {
        Vec8Q ai = basis_e(i);
        for (int j = 0; j < 8; ++j)
            sc.mul[i][j] = integral(to_alpha(e_mul(ai, basis_e(j))), "order not closed");
        Vec8Q c = ai;
        for (int k = 1; k < 8; ++k)
            c[k] = -c[k];
        sc.conj[i] = integral(to_alpha(c), "order not closed");
        sc.trace[i] = kBasis2[i][0];
    }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
        {
            Vec8Q cj = basis_e(j);
            for (int k = 1; k < 8; ++k)
                cj[k] = -cj[k];
            Rational re = e_mul(basis_e(i), cj)[0];
            Rational tr = 2 * re;
            if (tr.get_den() != 1)
                throw ArithmeticError("order not closed");
            sc.gram[i][j] = static_cast<int>(tr.get_num().get_si());
        }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                if (sc.mul[i][j][k] != 0)
                    sc.mul_terms.push_back({i, j, k, sc.mul[i][j][k]});
    return sc;
}

} // namespace

UnitProduct e_product(int i, int j)
{
    return units().at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

const StructureConstants& structure_constants()
{
    static const StructureConstants sc = build();
    return sc;
}

Integer gram_determinant()
{
    const auto& sc = structure_constants();
    // Bareiss fraction-free elimination
    std::array<std::array<Integer, 8>, 8> m;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            m[i][j] = sc.gram[i][j];
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < 7; ++k)
    {
        if (sgn(m[k][k]) == 0)
        {
            int r = k + 1;
            while (r < 8 && sgn(m[r][k]) == 0)
                ++r;
            if (r == 8)
                return 0;
            std::swap(m[r], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < 8; ++i)
            for (int j = k + 1; j < 8; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[7][7];
}

std::array<long, 8> alpha_from_e2(const std::array<long, 8>& e2)
{
    Vec8Q v;
    for (int k = 0; k < 8; ++k)
    {
        v[k] = Rational(e2[k], 2);
        v[k].canonicalize();
    }
    auto a = integral(to_alpha(v), "not an element of the integral order");
    std::array<long, 8> r{};
    for (int k = 0; k < 8; ++k)
        r[k] = a[k];
    return r;
}

std::array<Integer, 8> e2_coords(const Octonion<Integer>& x)
{
    const auto& sc = structure_constants();
    std::array<Integer, 8> r;
    r.fill(0);
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k)
            r[k] += x[i] * sc.basis2[i][k];
    return r;
}

} // namespace heptalift
