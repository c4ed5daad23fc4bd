#include "heptalift/lift.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "heptalift/siegel.hpp"

namespace heptalift
{

std::vector<Integer> tau_table(std::size_t N)
{
    if (N < 1)
        throw std::invalid_argument("N must be >= 1");
    // prod (1 - q^n) to order N-1 by Euler's pentagonal theorem
    const long L = static_cast<long>(N) - 1;
    std::vector<std::pair<long, int>> eta; // (exponent, sign), exponent >= 1
    for (long j = 1;; ++j)
    {
        long a = j * (3 * j - 1) / 2, b = j * (3 * j + 1) / 2;
        if (a > L)
            break;
        int s = (j % 2) ? -1 : 1;
        eta.emplace_back(a, s);
        if (b <= L)
            eta.emplace_back(b, s);
    }
    // f = g^24 with g(0) = 1: n f_n = sum_j (25 j - n) g_j f_{n-j}
    std::vector<Integer> f(static_cast<std::size_t>(L) + 1);
    f[0] = 1;
    for (long n = 1; n <= L; ++n)
    {
        Integer acc = 0;
        for (const auto& [j, s] : eta)
        {
            if (j > n)
                break;
            long w = 25 * j - n;
            if (s > 0)
                acc += w * f[static_cast<std::size_t>(n - j)];
            else
                acc -= w * f[static_cast<std::size_t>(n - j)];
        }
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        f[static_cast<std::size_t>(n)] = acc;
    }
    std::vector<Integer> tau(N + 1);
    for (std::size_t n = 1; n <= N; ++n)
        tau[n] = f[n - 1];
    return tau;
}

std::vector<unsigned long> primes_up_to(unsigned long n)
{
    std::vector<bool> comp(n + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= n; ++i)
    {
        if (comp[i])
            continue;
        out.push_back(i);
        for (unsigned long j = i * i; j <= n; j += i)
            comp[j] = true;
    }
    return out;
}

const Integer& EigenData::at(unsigned long p) const
{
    auto it = ap.find(p);
    if (it == ap.end())
        throw std::out_of_range("missing prime " + std::to_string(p));
    return it->second;
}

bool EigenData::covers(unsigned long n) const
{
    for (unsigned long p : primes_up_to(n))
        if (!ap.count(p))
            return false;
    return true;
}

void deligne_check(const EigenData& e)
{
    for (const auto& [p, a] : e.ap)
    {
        Integer bound = 4 * integer_pow(p, static_cast<unsigned long>(e.motivic_weight()));
        if (a * a > bound)
            throw std::invalid_argument("a_f(" + std::to_string(p) + ") violates the Deligne bound");
    }
}

EigenData eigen_delta(unsigned long N)
{
    auto tau = tau_table(N);
    EigenData e;
    e.k = 10;
    for (unsigned long p : primes_up_to(N))
        e.ap[p] = tau[p];
    deligne_check(e);
    return e;
}

EigenData eigen_from_csv(const std::string& path, int k)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("p,a_p", 0) != 0)
        throw std::invalid_argument("eigen CSV must start with the header p,a_p");
    EigenData e;
    e.k = k;
    int row = 1;
    while (std::getline(in, line))
    {
        ++row;
        if (line.empty() || line == "\r")
            continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("row " + std::to_string(row) + ": expected p,a_p");
        std::string ps = line.substr(0, comma), as = line.substr(comma + 1);
        while (!as.empty() && (as.back() == '\r' || as.back() == ' '))
            as.pop_back();
        unsigned long p = std::stoul(ps);
        if (!is_prime(p))
            throw std::invalid_argument("row " + std::to_string(row) + ": " + ps + " is not prime");
        Integer a;
        if (a.set_str(as, 10) != 0)
            throw std::invalid_argument("row " + std::to_string(row) + ": bad a_p");
        e.ap[p] = a;
    }
    deligne_check(e);
    return e;
}

std::vector<Integer> satake_power_sums(const Integer& ap, unsigned long p, int k, int jmax)
{
    std::vector<Integer> t;
    t.push_back(2);
    if (jmax >= 1)
        t.push_back(ap);
    Integer pw = integer_pow(p, static_cast<unsigned long>(2 * k - 9));
    for (int j = 1; j < jmax; ++j)
        t.push_back(ap * t[static_cast<std::size_t>(j)] - pw * t[static_cast<std::size_t>(j - 1)]);
    return t;
}

Rational local_lift_factor(const ElemDivisors& d, const EigenData& e)
{
    const int m = d.sum();
    const int w = e.motivic_weight();
    SiegelPoly s = f_poly(d.p, d.a1, d.a2 - d.a1, d.a3 - d.a1);
    auto c = symmetric_coefficients(tilde_f(s), m);
    auto t = satake_power_sums(e.at(d.p), d.p, e.k, m);
    Rational r = 0;
    for (const auto& [j, cj] : c)
    {
        if ((m - j) % 2 != 0)
            throw ArithmeticError("tilde-f parity bug");
        // p^{m w/2} (alpha^j + alpha^-j) = p^{(m-j) w/2} t_j, and the j = 0 term counts once
        Integer scale = integer_pow(d.p, static_cast<unsigned long>((m - j) / 2 * w));
        if (j == 0)
            r += Rational(cj * scale);
        else
            r += Rational(cj * scale * t[static_cast<std::size_t>(j)]);
    }
    return r;
}

Rational lift_coefficient(const std::map<unsigned long, ElemDivisors>& genus, const EigenData& e)
{
    Rational r = 1;
    for (const auto& [p, d] : genus)
        r *= local_lift_factor(d, e);
    return r;
}

Rational fourier_coeff(const JordanElement<Integer>& T, const EigenData& e)
{
    if (!is_positive(T))
        throw std::invalid_argument("Fourier coefficients are defined for positive definite T");
    return lift_coefficient(genus_invariants(T), e);
}

namespace
{

// all sorted triples with the given sum
std::vector<ElemDivisors> triples(unsigned long p, int m)
{
    std::vector<ElemDivisors> out;
    for (int a1 = 0; 3 * a1 <= m; ++a1)
        for (int a2 = a1; a1 + 2 * a2 <= m; ++a2)
            out.push_back({p, a1, a2, m - a1 - a2});
    return out;
}

} // namespace

std::vector<LiftRow> lift_table(const EigenData& e, unsigned long max_det)
{
    std::vector<std::vector<LiftRow>> per_det(max_det + 1);
    std::vector<std::string> errors(max_det + 1);
#pragma omp parallel for schedule(dynamic, 4)
    for (long dl = 1; dl <= static_cast<long>(max_det); ++dl)
    {
        try
        {
            unsigned long d = static_cast<unsigned long>(dl);
            std::vector<std::pair<unsigned long, int>> fac;
            unsigned long n = d;
            for (unsigned long q = 2; q * q <= n; ++q)
                if (n % q == 0)
                {
                    int c = 0;
                    while (n % q == 0)
                    {
                        n /= q;
                        ++c;
                    }
                    fac.emplace_back(q, c);
                }
            if (n > 1)
                fac.emplace_back(n, 1);
            std::vector<std::map<unsigned long, ElemDivisors>> genera{{}};
            for (const auto& [q, c] : fac)
            {
                std::vector<std::map<unsigned long, ElemDivisors>> next;
                for (const auto& g : genera)
                    for (const auto& t : triples(q, c))
                    {
                        auto h = g;
                        h[q] = t;
                        next.push_back(std::move(h));
                    }
                genera = std::move(next);
            }
            for (auto& g : genera)
            {
                Rational a = lift_coefficient(g, e);
                per_det[d].push_back({Integer(d), std::move(g), a});
            }
        }
        catch (const std::exception& ex)
        {
            errors[static_cast<std::size_t>(dl)] = ex.what();
        }
    }
    for (const auto& err : errors)
        if (!err.empty())
            throw std::runtime_error(err);
    std::vector<LiftRow> out;
    for (auto& v : per_det)
        for (auto& r : v)
            out.push_back(std::move(r));
    return out;
}

nlohmann::json to_json(const LiftRow& r)
{
    nlohmann::json div = nlohmann::json::object();
    for (const auto& [p, d] : r.genus)
        div[std::to_string(p)] = {d.a1, d.a2, d.a3};
    return {{"det", r.det.get_str()}, {"divisors", div}, {"coefficient", to_string(r.coefficient)}};
}

// ---- local L-factors ------------------------------------------------------

namespace
{

unsigned long common_d(const Surd& x, const Surd& y)
{
    if (x.b == 0)
        return y.d;
    if (y.b == 0 || x.d == y.d)
        return x.d;
    throw std::invalid_argument("surds over different fields");
}

} // namespace

Surd operator+(const Surd& x, const Surd& y)
{
    return Surd(x.a + y.a, x.b + y.b, common_d(x, y));
}

Surd operator-(const Surd& x, const Surd& y)
{
    return Surd(x.a - y.a, x.b - y.b, common_d(x, y));
}

Surd operator*(const Surd& x, const Surd& y)
{
    unsigned long d = common_d(x, y);
    return Surd(x.a * y.a + x.b * y.b * Rational(static_cast<long>(d)), x.a * y.b + x.b * y.a, d);
}

std::string Surd::str() const
{
    if (b == 0)
        return to_string(a);
    return to_string(a) + "+" + to_string(b) + "*sqrt(" + std::to_string(d) + ")";
}

namespace
{

SurdPoly pmul(const SurdPoly& x, const SurdPoly& y)
{
    SurdPoly r(x.size() + y.size() - 1, Surd(Rational(0)));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            r[i + j] = r[i + j] + x[i] * y[j];
    return r;
}

// 1 - c x + e x^2
SurdPoly quad(const Surd& c, const Rational& e)
{
    return {Surd(Rational(1)), Surd(Rational(0)) - c, Surd(e)};
}

} // namespace

int LocalFactors::std56_degree() const
{
    int d = 0;
    for (const auto& f : std56)
        d += static_cast<int>(f.size()) - 1;
    return d;
}

Surd satake_trace(const Integer& ap, unsigned long p, int k)
{
    int w = 2 * k - 9;
    // p^{-w/2} = p^{-(w+1)/2} sqrt p for odd w
    if (w % 2 != 0)
        return Surd(Rational(0), Rational(ap) / Rational(integer_pow(p, static_cast<unsigned long>((w + 1) / 2))), p);
    return Surd(Rational(ap) / Rational(integer_pow(p, static_cast<unsigned long>(w / 2))), Rational(0), p);
}

LocalFactors local_L_factors_from_trace(unsigned long p, const Surd& u)
{
    // s_j = alpha^j + alpha^-j
    std::vector<Surd> s{Surd(Rational(2)), u};
    for (int j = 1; j < 3; ++j)
        s.push_back(u * s[static_cast<std::size_t>(j)] - s[static_cast<std::size_t>(j - 1)]);
    LocalFactors f;
    f.p = p;
    f.sym2 = pmul({Surd(Rational(1)), Surd(Rational(-1))}, quad(s[2], 1));
    f.sym3 = pmul(quad(s[3], 1), quad(s[1], 1));
    f.std56.push_back(f.sym3);
    Rational P(static_cast<long>(p));
    for (int span : {4, 8})
        for (int i = -span; i <= span; ++i)
        {
            // (1 - alpha p^-i x)(1 - alpha^-1 p^-i x)
            Rational pi = rational_pow(P, -i);
            f.std56.push_back(quad(u * Surd(pi), pi * pi));
        }
    return f;
}

LocalFactors local_L_factors(unsigned long p, const Integer& ap, int k)
{
    return local_L_factors_from_trace(p, satake_trace(ap, p, k));
}

} // namespace heptalift
