#pragma once

#include <array>
#include <random>
#include <variant>
#include <vector>

#include <json.hpp>

#include "heptalift/octonion.hpp"

namespace heptalift
{

/// [ a   x   y ]
/// [ x'  b   z ]
/// [ y'  z'  c ]   (' = conjugate)
template <class R>
struct JordanElement
{
    R a{0}, b{0}, c{0};
    Octonion<R> x, y, z;

    static JordanElement diag(const R& a, const R& b, const R& c)
    {
        JordanElement X;
        X.a = a;
        X.b = b;
        X.c = c;
        return X;
    }
    static JordanElement identity() { return diag(R(1), R(1), R(1)); }

    JordanElement& operator+=(const JordanElement& o)
    {
        a += o.a;
        b += o.b;
        c += o.c;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    friend JordanElement operator+(JordanElement l, const JordanElement& r) { return l += r; }
    JordanElement operator-() const
    {
        JordanElement r;
        r.a = -a;
        r.b = -b;
        r.c = -c;
        r.x = -x;
        r.y = -y;
        r.z = -z;
        return r;
    }
    friend JordanElement operator-(const JordanElement& l, const JordanElement& r) { return l + (-r); }

    JordanElement scaled(const R& s) const
    {
        JordanElement r;
        r.a = a * s;
        r.b = b * s;
        r.c = c * s;
        r.x = x.scaled(s);
        r.y = y.scaled(s);
        r.z = z.scaled(s);
        return r;
    }

    bool is_zero() const
    {
        return heptalift::is_zero(a) && heptalift::is_zero(b) && heptalift::is_zero(c) && x.is_zero() &&
               y.is_zero() && z.is_zero();
    }

    /// Entry (i,j), 0-based, as an octonion (diagonal entries are scalars).
    Octonion<R> entry(int i, int j) const
    {
        if (i == j)
            return Octonion<R>::scalar(i == 0 ? a : (i == 1 ? b : c));
        if (i > j)
            return entry(j, i).conj();
        if (i == 0)
            return j == 1 ? x : y;
        return z;
    }

    friend bool operator==(const JordanElement& l, const JordanElement& r)
    {
        return l.a == r.a && l.b == r.b && l.c == r.c && l.x == r.x && l.y == r.y && l.z == r.z;
    }
};

template <class R>
using Matrix3 = std::array<std::array<Octonion<R>, 3>, 3>;

template <class R>
Matrix3<R> to_matrix(const JordanElement<R>& X)
{
    Matrix3<R> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = X.entry(i, j);
    return m;
}

namespace detail
{
template <class R>
R real_scalar(const Octonion<R>& o)
{
    for (int k = 1; k < 8; ++k)
        if (!heptalift::is_zero(o[k]))
            throw ArithmeticError("diagonal entry is not a scalar");
    return o[0];
}
} // namespace detail

/// Reads the upper triangle of a Hermitian octonion matrix.
template <class R>
JordanElement<R> from_matrix(const Matrix3<R>& m)
{
    JordanElement<R> X;
    X.a = detail::real_scalar(m[0][0]);
    X.b = detail::real_scalar(m[1][1]);
    X.c = detail::real_scalar(m[2][2]);
    X.x = m[0][1];
    X.y = m[0][2];
    X.z = m[1][2];
    return X;
}

template <class R>
Matrix3<R> matmul(const Matrix3<R>& p, const Matrix3<R>& q)
{
    Matrix3<R> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                r[i][j] += p[i][k] * q[k][j];
    return r;
}

template <class R>
R det(const JordanElement<R>& X)
{
    R d = X.a * X.b * X.c;
    d -= X.a * X.z.norm();
    d -= X.b * X.y.norm();
    d -= X.c * X.x.norm();
    d += ((X.x * X.z) * X.y.conj()).trace();
    return d;
}

template <class R>
R trace(const JordanElement<R>& X)
{
    return X.a + X.b + X.c;
}

/// X x X; integral over every ring.
template <class R>
JordanElement<R> adjoint(const JordanElement<R>& X)
{
    JordanElement<R> r;
    r.a = X.b * X.c - X.z.norm();
    r.b = X.a * X.c - X.y.norm();
    r.c = X.a * X.b - X.x.norm();
    r.x = X.y * X.z.conj() - X.x.scaled(X.c);
    r.y = X.x * X.z - X.y.scaled(X.b);
    r.z = X.x.conj() * X.y - X.z.scaled(X.a);
    return r;
}

/// Freudenthal cross product. The diagonal uses the real form
/// Tr(z1 conj z2) of the symmetrized octonion term.
template <class R>
JordanElement<R> cross(const JordanElement<R>& X, const JordanElement<R>& Y)
{
    if (&X == &Y || X == Y)
        return adjoint(X);
    JordanElement<R> r;
    r.a = half(R(X.b * Y.c + X.c * Y.b - X.z.pairing(Y.z)));
    r.b = half(R(X.a * Y.c + X.c * Y.a - X.y.pairing(Y.y)));
    r.c = half(R(X.a * Y.b + X.b * Y.a - X.x.pairing(Y.x)));
    auto halve = [](const Octonion<R>& o) {
        Octonion<R> h;
        for (int k = 0; k < 8; ++k)
            h[k] = half(o[k]);
        return h;
    };
    r.x = halve(-(Y.x.scaled(X.c)) - X.x.scaled(Y.c) + X.y * Y.z.conj() + Y.y * X.z.conj());
    r.y = halve(-(Y.y.scaled(X.b)) - X.y.scaled(Y.b) + X.x * Y.z + Y.x * X.z);
    r.z = halve(-(Y.z.scaled(X.a)) - X.z.scaled(Y.a) + X.x.conj() * Y.y + Y.x.conj() * X.y);
    return r;
}

/// X o Y = (XY + YX)/2
template <class R>
JordanElement<R> circ(const JordanElement<R>& X, const JordanElement<R>& Y)
{
    Matrix3<R> mx = to_matrix(X), my = to_matrix(Y);
    Matrix3<R> p = matmul(mx, my), q = matmul(my, mx);
    Matrix3<R> s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 8; ++k)
                s[i][j][k] = half(R(p[i][j][k] + q[i][j][k]));
    return from_matrix(s);
}

/// (X, Y) = Tr(X o Y)
template <class R>
R inner(const JordanElement<R>& X, const JordanElement<R>& Y)
{
    return X.a * Y.a + X.b * Y.b + X.c * Y.c + X.x.pairing(Y.x) + X.y.pairing(Y.y) + X.z.pairing(Y.z);
}

template <class R>
bool is_positive(const JordanElement<R>& X)
{
    return X.a > 0 && X.a * X.b - X.x.norm() > 0 && det(X) > 0;
}

// ---- group generators --------------------------------------------------

template <class R>
struct GammaToken
{
    R eps;
};

/// (1 + conj(xi) e_ji) X (1 + xi e_ij), 0-based i != j
template <class R>
struct MToken
{
    Octonion<R> xi;
    int i, j;
};

template <class R>
struct ThetaToken
{
    std::array<R, 3> r;
};

/// new[sigma[i]][sigma[j]] = old[i][j]
struct PermToken
{
    std::array<int, 3> sigma;
};

template <class R>
using GeneratorToken = std::variant<GammaToken<R>, MToken<R>, ThetaToken<R>, PermToken>;

template <class R>
using GeneratorWord = std::vector<GeneratorToken<R>>;

template <class R>
JordanElement<R> apply_m(const JordanElement<R>& X, const Octonion<R>& xi, int i, int j)
{
    if (i == j || i < 0 || j < 0 || i > 2 || j > 2)
        throw std::invalid_argument("m-token needs distinct indices in 0..2");
    Matrix3<R> m = to_matrix(X);
    Octonion<R> xib = xi.conj();
    // row j += conj(xi) * row i
    for (int s = 0; s < 3; ++s)
        m[j][s] += xib * m[i][s];
    // column j += column i * xi
    for (int r = 0; r < 3; ++r)
        m[r][j] += m[r][i] * xi;
    return from_matrix(m);
}

template <class R>
JordanElement<R> apply_perm(const JordanElement<R>& X, const std::array<int, 3>& sigma)
{
    Matrix3<R> m = to_matrix(X), n;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            n[sigma[i]][sigma[j]] = m[i][j];
    return from_matrix(n);
}

/// Applies the tokens left to right; returns the image and the multiplier nu.
template <class R>
std::pair<JordanElement<R>, R> apply_generator(const GeneratorWord<R>& w, JordanElement<R> X)
{
    R nu(1);
    for (const auto& tok : w)
    {
        if (const auto* g = std::get_if<GammaToken<R>>(&tok))
        {
            R inv = unit_inverse(g->eps);
            X.a = X.a * g->eps;
            X.b = X.b * g->eps;
            X.x = X.x.scaled(g->eps);
            X.c = X.c * inv;
            nu = nu * g->eps;
        }
        else if (const auto* m = std::get_if<MToken<R>>(&tok))
        {
            X = apply_m(X, m->xi, m->i, m->j);
        }
        else if (const auto* t = std::get_if<ThetaToken<R>>(&tok))
        {
            for (const auto& ri : t->r)
                (void)unit_inverse(ri);
            const auto& r = t->r;
            X.a = X.a * r[0] * r[0];
            X.b = X.b * r[1] * r[1];
            X.c = X.c * r[2] * r[2];
            X.x = X.x.scaled(r[0] * r[1]);
            X.y = X.y.scaled(r[0] * r[2]);
            X.z = X.z.scaled(r[1] * r[2]);
            R rr = r[0] * r[1] * r[2];
            nu = nu * rr * rr;
        }
        else
        {
            X = apply_perm(X, std::get<PermToken>(tok).sigma);
        }
    }
    return {X, nu};
}

/// Random word with multiplier 1 over Z: m-tokens with small xi,
/// permutations, and theta(+-1).
GeneratorWord<Integer> random_unimodular_word(std::mt19937_64& rng, int length, int xi_bound = 2);

/// Random word over Z including gamma(-1); multiplier is +-1.
GeneratorWord<Integer> random_word(std::mt19937_64& rng, int length, int xi_bound = 2);

Octonion<Integer> random_octonion(std::mt19937_64& rng, int bound);
JordanElement<Integer> random_jordan(std::mt19937_64& rng, int bound);

/// {"diag":[a,b,c],"x":[8],"y":[8],"z":[8]}; entries are integers or
/// decimal strings.
JordanElement<Integer> jordan_from_json(const nlohmann::json& j);
nlohmann::json to_json(const JordanElement<Integer>& X);

} // namespace heptalift
