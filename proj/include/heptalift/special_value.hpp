#pragma once

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "heptalift/ring.hpp"

namespace heptalift
{

/// Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(unsigned n);

/// Finite sum of monomials q * pi^{h/2} * prod symbol^e, where the symbols
/// are odd zeta values "zeta<n>" and symmetric-square L-values "symsq<r>".
class SpecialValue
{
public:
    using Symbols = std::map<std::string, int>;
    using Key = std::pair<int, Symbols>;

    SpecialValue() = default;
    SpecialValue(const Rational& q);

    static SpecialValue pi_half_power(int h);
    /// zeta(n): even n >= 2 expands to a rational multiple of pi^n,
    /// odd n >= 3 stays a symbol.
    static SpecialValue zeta(int n);
    static SpecialValue symsq(int r);
    /// Gamma(n/2) for a positive integer n.
    static SpecialValue gamma_half(int n);
    /// xi(s) = pi^{-s/2} Gamma(s/2) zeta(s).
    static SpecialValue xi(int s);

    const std::map<Key, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// The only term; throws unless monomial.
    const std::pair<const Key, Rational>& monomial() const;

    /// Coefficient of the monomial pi^{h/2} * symbols.
    Rational coefficient(int h, const Symbols& symbols) const;

    SpecialValue& operator+=(const SpecialValue& o);
    SpecialValue& operator*=(const SpecialValue& o);
    SpecialValue& operator/=(const SpecialValue& divisor);
    SpecialValue operator-() const;

    friend SpecialValue operator+(SpecialValue a, const SpecialValue& b) { return a += b; }
    friend SpecialValue operator-(SpecialValue a, const SpecialValue& b) { return a += -b; }
    friend SpecialValue operator*(SpecialValue a, const SpecialValue& b) { return a *= b; }
    friend SpecialValue operator/(SpecialValue a, const SpecialValue& b) { return a /= b; }
    friend bool operator==(const SpecialValue& a, const SpecialValue& b) { return a.terms_ == b.terms_; }

    /// Integer power of a monomial.
    SpecialValue pow(int e) const;

    nlohmann::json to_json() const;
    std::string str() const;

private:
    void add_term(const Key& k, const Rational& c);

    std::map<Key, Rational> terms_;
};

} // namespace heptalift
