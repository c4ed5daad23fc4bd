#include "heptalift/special_value.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace heptalift
{

Rational bernoulli(unsigned n)
{
    static std::mutex lock;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> guard(lock);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    while (table.size() <= n)
    {
        unsigned m = static_cast<unsigned>(table.size());
        Rational acc = 0;
        Integer binom = 1;
        for (unsigned k = 0; k < m; ++k)
        {
            acc += binom * table[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        Rational b = -acc / Rational(m + 1);
        table.push_back(b);
    }
    return table[n];
}

SpecialValue::SpecialValue(const Rational& q)
{
    add_term({0, {}}, q);
}

SpecialValue SpecialValue::pi_half_power(int h)
{
    SpecialValue r;
    r.add_term({h, {}}, Rational(1));
    return r;
}

SpecialValue SpecialValue::zeta(int n)
{
    if (n >= 2 && n % 2 == 0)
    {
        unsigned m = static_cast<unsigned>(n / 2);
        // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
        Rational c = bernoulli(2 * m) * integer_pow(2, 2 * m) / (2 * factorial(2 * m));
        if (m % 2 == 0)
            c = -c;
        SpecialValue r;
        r.add_term({n * 2, {}}, c);
        return r;
    }
    if (n >= 3)
    {
        SpecialValue r;
        r.add_term({0, {{"zeta" + std::to_string(n), 1}}}, Rational(1));
        return r;
    }
    throw std::invalid_argument("zeta(" + std::to_string(n) + ") is not representable");
}

SpecialValue SpecialValue::symsq(int r)
{
    if (r < 1 || r % 2 == 0)
        throw std::invalid_argument("symsq(" + std::to_string(r) + ") is not representable");
    SpecialValue v;
    v.add_term({0, {{"symsq" + std::to_string(r), 1}}}, Rational(1));
    return v;
}

SpecialValue SpecialValue::gamma_half(int n)
{
    if (n <= 0)
        throw ArithmeticError("Gamma at non-positive argument " + std::to_string(n) + "/2");
    if (n % 2 == 0)
        return SpecialValue(Rational(factorial(static_cast<unsigned long>(n / 2 - 1))));
    // Gamma(m + 1/2) = (2m-1)!! / 2^m sqrt(pi)
    unsigned long m = static_cast<unsigned long>(n / 2);
    Integer dfact;
    mpz_2fac_ui(dfact.get_mpz_t(), m == 0 ? 0 : 2 * m - 1);
    SpecialValue r;
    r.add_term({1, {}}, Rational(dfact, integer_pow(2, m)));
    return r;
}

SpecialValue SpecialValue::xi(int s)
{
    return pi_half_power(-s) * gamma_half(s) * zeta(s);
}

const std::pair<const SpecialValue::Key, Rational>& SpecialValue::monomial() const
{
    if (terms_.size() != 1)
        throw ArithmeticError("non-monomial divisor");
    return *terms_.begin();
}

Rational SpecialValue::coefficient(int h, const Symbols& symbols) const
{
    auto it = terms_.find({h, symbols});
    return it == terms_.end() ? Rational(0) : it->second;
}

void SpecialValue::add_term(const Key& k, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto it = terms_.find(k);
    if (it == terms_.end())
    {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0)
        terms_.erase(it);
}

SpecialValue& SpecialValue::operator+=(const SpecialValue& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

namespace
{

SpecialValue::Symbols merge(const SpecialValue::Symbols& a, const SpecialValue::Symbols& b, int sign)
{
    SpecialValue::Symbols r = a;
    for (const auto& [s, e] : b)
    {
        int v = (r[s] += sign * e);
        if (v == 0)
            r.erase(s);
    }
    return r;
}

} // namespace

SpecialValue& SpecialValue::operator*=(const SpecialValue& o)
{
    SpecialValue r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term({ka.first + kb.first, merge(ka.second, kb.second, 1)}, ca * cb);
    return *this = std::move(r);
}

SpecialValue& SpecialValue::operator/=(const SpecialValue& divisor)
{
    const auto& [kd, cd] = divisor.monomial();
    SpecialValue r;
    for (const auto& [k, c] : terms_)
        r.add_term({k.first - kd.first, merge(k.second, kd.second, -1)}, c / cd);
    return *this = std::move(r);
}

SpecialValue SpecialValue::operator-() const
{
    SpecialValue r = *this;
    for (auto& [k, c] : r.terms_)
        c = -c;
    return r;
}

SpecialValue SpecialValue::pow(int e) const
{
    const auto& [k, c] = monomial();
    SpecialValue r;
    Symbols s;
    for (const auto& [name, v] : k.second)
        s[name] = v * e;
    r.add_term({k.first * e, s}, rational_pow(c, e));
    return r;
}

nlohmann::json SpecialValue::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : terms_)
    {
        nlohmann::json sym = nlohmann::json::object();
        for (const auto& [name, e] : k.second)
            sym[name] = e;
        arr.push_back({{"coeff", to_string(c)}, {"pi_half_power", k.first}, {"symbols", sym}});
    }
    return arr;
}

std::string SpecialValue::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_)
    {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        if (k.first != 0)
            os << "*pi^(" << k.first << "/2)";
        for (const auto& [name, e] : k.second)
            os << "*" << name << "^" << e;
    }
    return os.str();
}

} // namespace heptalift
