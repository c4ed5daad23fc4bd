#include "heptalift/padic.hpp"

#include <algorithm>

namespace heptalift
{

std::string ElemDivisors::str() const
{
    return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + ")";
}

ElemDivisors make_divisors(unsigned long p, int a, int b, int c)
{
    std::array<int, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return {p, v[0], v[1], v[2]};
}

bool is_prime(unsigned long p)
{
    if (p < 2)
        return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace
{

using JM = JordanElement<ZMod>;
using OM = Octonion<ZMod>;

struct Reducer
{
    std::int64_t p;
    int N;
    std::int64_t modulus;

    int val(const ZMod& v) const
    {
        std::int64_t x = v.value();
        if (x == 0)
            return N;
        int e = 0;
        while (x % p == 0)
        {
            x /= p;
            ++e;
        }
        return e;
    }

    int val(const OM& o) const
    {
        int m = N;
        for (int k = 0; k < 8; ++k)
            m = std::min(m, val(o[k]));
        return m;
    }

    static ZMod& diag(JM& X, int i) { return i == 0 ? X.a : (i == 1 ? X.b : X.c); }
    static OM& off(JM& X, int i, int j)
    {
        if (i == 0)
            return j == 1 ? X.x : X.y;
        return X.z;
    }

    std::int64_t pow_p(int e) const
    {
        std::int64_t r = 1;
        for (int i = 0; i < e; ++i)
            r *= p;
        return r;
    }

    // x / p^mu for a residue divisible by p^mu, lifted back to Z/p^N
    ZMod divide(const ZMod& v, int mu) const { return ZMod(v.value() / pow_p(mu), modulus); }

    OM divide(const OM& o, int mu) const
    {
        OM r;
        for (int k = 0; k < 8; ++k)
            r[k] = divide(o[k], mu);
        return r;
    }

    // Makes the (i,i) entry attain valuation mu via m_{xi e_ji}, given that the
    // off-diagonal entry at (i,j), i<j, attains mu.
    JM lift_diagonal(const JM& X, int i, int j, int mu) const
    {
        auto attempt = [&](const OM& xi) -> std::optional<JM> {
            JM Z = apply_m(X, xi, j, i);
            if (val(diag(Z, i)) == mu)
                return Z;
            return std::nullopt;
        };
        for (int k = 0; k < 8; ++k)
        {
            OM xi;
            xi[k] = ZMod(1, modulus);
            for (int k2 = 0; k2 < 8; ++k2)
                if (k2 != k)
                    xi[k2] = ZMod(0, modulus);
            if (auto Z = attempt(xi))
                return *Z;
        }
        // exhaustive search over o / p o
        if (p <= 5)
        {
            std::int64_t total = pow_p(8);
            for (std::int64_t code = 1; code < total; ++code)
            {
                OM xi;
                std::int64_t c = code;
                for (int k = 0; k < 8; ++k)
                {
                    xi[k] = ZMod(c % p, modulus);
                    c /= p;
                }
                if (auto Z = attempt(xi))
                    return *Z;
            }
        }
        throw ArithmeticError("reduction failure");
    }

    std::array<int, 3> run(JM X) const
    {
        std::array<int, 3> exps{};
        for (int s = 0; s < 3; ++s)
        {
            int mu = N;
            for (int i = s; i < 3; ++i)
            {
                mu = std::min(mu, val(diag(X, i)));
                for (int j = i + 1; j < 3; ++j)
                    mu = std::min(mu, val(off(X, i, j)));
            }
            int best_diag = -1;
            std::pair<int, int> best_off{-1, -1};
            for (int i = s; i < 3 && best_diag < 0; ++i)
                if (val(diag(X, i)) == mu)
                    best_diag = i;
            for (int i = s; i < 3 && best_off.first < 0; ++i)
                for (int j = i + 1; j < 3 && best_off.first < 0; ++j)
                    if (val(off(X, i, j)) == mu)
                        best_off = {i, j};
            if (mu >= N)
                throw ArithmeticError("insufficient precision");
            if (best_diag < 0)
            {
                auto [i, j] = best_off;
                X = lift_diagonal(X, i, j, mu);
                best_diag = i;
            }
            if (best_diag != s)
            {
                std::array<int, 3> sigma{0, 1, 2};
                std::swap(sigma[best_diag], sigma[s]);
                X = apply_perm(X, sigma);
            }
            ZMod u = divide(diag(X, s), mu);
            ZMod uinv = u.inverse();
            for (int j = s + 1; j < 3; ++j)
            {
                OM xi = divide(off(X, s, j), mu).scaled(-uinv);
                X = apply_m(X, xi, s, j);
                if (!off(X, s, j).is_zero())
                    throw ArithmeticError("reduction failure");
            }
            exps[static_cast<std::size_t>(s)] = mu;
        }
        return exps;
    }
};

JM reduce_mod(const JordanElement<Integer>& T, std::int64_t m)
{
    JM X;
    X.a = ZMod(T.a, m);
    X.b = ZMod(T.b, m);
    X.c = ZMod(T.c, m);
    X.x = map_coords<ZMod>(T.x, m);
    X.y = map_coords<ZMod>(T.y, m);
    X.z = map_coords<ZMod>(T.z, m);
    return X;
}

} // namespace

ElemDivisors elementary_divisors(const JordanElement<Integer>& T, unsigned long p, std::optional<int> precision)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    Integer d = det(T);
    if (sgn(d) == 0)
        throw ArithmeticError("singular element");
    int ord = valuation(d, p);
    int N = precision.value_or(ord + 1);
    if (N < 1)
        throw std::invalid_argument("precision must be positive");
    if (ord >= N)
        throw ArithmeticError("insufficient precision");
    Integer modulus = integer_pow(p, static_cast<unsigned long>(N));
    if (modulus >= Integer(1) << 62)
    {
        // the exponents are forced when ord <= 1
        if (ord <= 1)
            return make_divisors(p, 0, 0, ord);
        throw std::invalid_argument("p^N exceeds the 62-bit working range");
    }
    Reducer r{static_cast<std::int64_t>(p), N, modulus.get_si()};
    auto e = r.run(reduce_mod(T, modulus.get_si()));
    ElemDivisors out = make_divisors(p, e[0], e[1], e[2]);
    if (out.sum() != ord)
        throw ArithmeticError("reduction failure: exponent sum " + std::to_string(out.sum()) + " != ord " +
                              std::to_string(ord));
    return out;
}

namespace
{

Integer pollard_rho(const Integer& n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c)
    {
        Integer x = 2, y = 2, g = 1;
        auto f = [&](const Integer& v) {
            Integer r = (v * v + c) % n;
            return r;
        };
        while (g == 1)
        {
            x = f(x);
            y = f(f(y));
            Integer diff = abs(x - y);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n)
            return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, int>& out)
{
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30))
    {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<Integer, int> factor_integer(const Integer& n)
{
    if (sgn(n) == 0)
        throw ArithmeticError("cannot factor zero");
    std::map<Integer, int> out;
    Integer m = abs(n);
    for (unsigned long p = 2; p < 1000 && m > 1; ++p)
        while (mpz_divisible_ui_p(m.get_mpz_t(), p))
        {
            ++out[Integer(p)];
            m /= p;
        }
    factor_into(m, out);
    return out;
}

std::map<unsigned long, ElemDivisors> genus_invariants(const JordanElement<Integer>& T)
{
    Integer d = det(T);
    if (sgn(d) == 0)
        throw ArithmeticError("singular element");
    std::map<unsigned long, ElemDivisors> out;
    for (const auto& [p, e] : factor_integer(d))
    {
        if (!p.fits_ulong_p())
            throw std::invalid_argument("prime factor " + p.get_str() + " out of range");
        unsigned long q = p.get_ui();
        out[q] = elementary_divisors(T, q);
    }
    return out;
}

} // namespace heptalift
