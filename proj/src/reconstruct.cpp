#include "heptalift/reconstruct.hpp"

namespace heptalift
{

std::optional<Rational> rational_reconstruct(const Rational& x, const Rational& bound, const Integer& max_den)
{
    // convergents h/k via h_n = a_n h_{n-1} + h_{n-2}
    Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    Integer num = x.get_num(), den = x.get_den();
    while (sgn(den) != 0)
    {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Integer h = a * h1 + h2;
        Integer k = a * k1 + k2;
        if (k > max_den)
            return std::nullopt;
        Rational c(h, k);
        c.canonicalize();
        if (abs(x - c) < bound)
            return c;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        Integer r = num - a * den;
        num = den;
        den = r;
    }
    return std::nullopt;
}

std::optional<Rational> rational_reconstruct(const std::string& decimal, const Rational& bound, const Integer& max_den)
{
    return rational_reconstruct(parse_rational(decimal), bound, max_den);
}

} // namespace heptalift
