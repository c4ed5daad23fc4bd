// scratch values convert implicitly, which the function-like macros do not accept
#define MPFR_USE_NO_MACRO

#include "heptalift/lvalue.hpp"

#include <cmath>
#include <stdexcept>

#include "heptalift/reconstruct.hpp"

namespace heptalift
{

// ---- BigFloat -------------------------------------------------------------

BigFloat::BigFloat(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
    live_ = true;
}

BigFloat::BigFloat(const BigFloat& o) : err(o.err)
{
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
    live_ = true;
}

BigFloat::BigFloat(BigFloat&& o) noexcept : err(o.err)
{
    // mpfr_t is an array type; swap into a fresh value
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
    live_ = true;
}

BigFloat& BigFloat::operator=(const BigFloat& o)
{
    if (this != &o)
    {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
        err = o.err;
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    err = o.err;
    return *this;
}

BigFloat::~BigFloat()
{
    if (live_)
        mpfr_clear(v_);
}

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec)
{
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    r.err = std::fabs(r.to_double()) * std::ldexp(1.0, -static_cast<int>(prec));
    return r;
}

std::string BigFloat::str(int digits) const
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return buf.data();
}

int BigFloat::correct_digits() const
{
    double v = std::fabs(to_double());
    if (v == 0 || err == 0)
        return static_cast<int>(precision() * 0.30103);
    double d = std::floor(std::log10(v / err));
    return d < 0 ? 0 : static_cast<int>(d);
}

namespace
{

double ulp_err(const BigFloat& x)
{
    return std::fabs(x.to_double()) * std::ldexp(1.0, -static_cast<int>(x.precision()) + 1);
}

} // namespace

BigFloat operator*(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    double av = std::fabs(a.to_double()), bv = std::fabs(b.to_double());
    r.err = av * b.err + bv * a.err + a.err * b.err + ulp_err(r);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    double bv = std::fabs(b.to_double());
    if (b.err >= bv)
        throw ArithmeticError("division by an interval containing zero");
    double rv = std::fabs(r.to_double());
    r.err = (a.err + rv * b.err) / (bv - b.err) + ulp_err(r);
    return r;
}

// ---- coefficients --------------------------------------------------------

std::vector<unsigned> divisor3_table(std::size_t N)
{
    std::vector<unsigned> d(N + 1, 0), d3(N + 1, 0);
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i; j <= N; j += i)
            ++d[j];
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i; j <= N; j += i)
            d3[j] += d[i];
    return d3;
}

std::vector<Rational> sym2_dirichlet_coeffs(const EigenData& e, std::size_t N)
{
    if (N >= 2 && !e.covers(N))
        throw std::invalid_argument("need more eigenvalues");
    std::vector<unsigned long> spf(N + 1, 0);
    for (unsigned long i = 2; i <= N; ++i)
        if (spf[i] == 0)
            for (unsigned long j = i; j <= N; j += i)
                if (spf[j] == 0)
                    spf[j] = i;
    // h_j(p): complete symmetric functions of {alpha^2, 1, alpha^-2}
    std::map<unsigned long, std::vector<Rational>> h;
    auto local = [&](unsigned long p, int j) -> const Rational& {
        auto& v = h[p];
        if (v.empty())
        {
            Integer a = e.at(p);
            Rational s2 = Rational(a * a) / Rational(integer_pow(p, static_cast<unsigned long>(e.motivic_weight()))) - 2;
            Rational e1 = s2 + 1;
            v = {Rational(1), e1};
        }
        while (static_cast<int>(v.size()) <= j)
        {
            std::size_t n = v.size();
            Rational e1 = v[1];
            Rational x = e1 * v[n - 1] - e1 * v[n - 2];
            if (n >= 3)
                x += v[n - 3];
            v.push_back(x);
        }
        return v[static_cast<std::size_t>(j)];
    };
    std::vector<Rational> b(N + 1);
    if (N >= 1)
        b[1] = 1;
    for (unsigned long n = 2; n <= N; ++n)
    {
        unsigned long p = spf[n], m = n;
        int j = 0;
        while (m % p == 0)
        {
            m /= p;
            ++j;
        }
        b[n] = b[m] * local(p, j);
    }
    return b;
}

// ---- smoothed series ----------------------------------------------------

namespace
{

mpfr_prec_t working_precision(int digits)
{
    if (digits < 1 || digits > 50)
        throw std::invalid_argument("digits must be in 1..50");
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 40;
}

// RAII scratch value
struct M
{
    mpfr_t v;
    explicit M(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~M() { mpfr_clear(v); }
    M(const M&) = delete;
    M& operator=(const M&) = delete;
    operator mpfr_ptr() { return v; }
};

struct KernelValue
{
    BigFloat value;
    double quad_err;
};

// F_sigma(x) = 4 (2 pi)^{-(w+sigma)} x^{-sigma}
//   * int_R e^{(sigma+1)v} e^{-pi e^{2v}} Gamma(w+sigma, 2 pi x e^{-v}) dv
// Trapezoid rule in v; Gamma(m, b) = (m-1)! e^{-b} sum_{j<m} b^j / j!.
KernelValue kernel(int w, int sigma, mpfr_srcptr x, mpfr_prec_t prec)
{
    const int m = w + sigma;
    if (m < 1)
        throw std::invalid_argument("kernel needs w + sigma >= 1");
    const double h = 2 * M_PI * M_PI / 5 / ((static_cast<double>(prec) + 20) * M_LN2);
    const double v0 = std::log(mpfr_get_d(x, MPFR_RNDN)) / 3;

    M pi(prec), twopix(prec), v(prec), t(prec), b(prec), s(prec), term(prec), g(prec);
    M sum_all(prec), sum_even(prec), gmax(prec), fact(prec);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul(twopix, pi, x, MPFR_RNDN);
    mpfr_mul_2ui(twopix, twopix, 1, MPFR_RNDN);
    mpfr_fac_ui(fact, static_cast<unsigned long>(m - 1), MPFR_RNDN);
    mpfr_set_zero(sum_all, 1);
    mpfr_set_zero(sum_even, 1);
    mpfr_set_zero(gmax, 1);

    // nodes v0 + idx h are formed exactly in MPFR; rounding them in double
    // would perturb the rule at the 1e-16 level
    auto eval = [&](long idx) {
        mpfr_set_d(v, h, MPFR_RNDN);
        mpfr_mul_si(v, v, idx, MPFR_RNDN);
        mpfr_add_d(v, v, v0, MPFR_RNDN);
        // exponent (sigma+1) v - pi e^{2v} - b
        mpfr_mul_2ui(t, v, 1, MPFR_RNDN);
        mpfr_exp(t, t, MPFR_RNDN);
        mpfr_mul(t, t, pi, MPFR_RNDN);
        mpfr_neg(b, v, MPFR_RNDN);
        mpfr_exp(b, b, MPFR_RNDN);
        mpfr_mul(b, b, twopix, MPFR_RNDN);
        mpfr_mul_si(g, v, sigma + 1, MPFR_RNDN);
        mpfr_sub(g, g, t, MPFR_RNDN);
        mpfr_sub(g, g, b, MPFR_RNDN);
        mpfr_exp(g, g, MPFR_RNDN);
        // sum_{j<m} b^j / j!
        mpfr_set_ui(s, 1, MPFR_RNDN);
        mpfr_set_ui(term, 1, MPFR_RNDN);
        for (int j = 1; j < m; ++j)
        {
            mpfr_mul(term, term, b, MPFR_RNDN);
            mpfr_div_ui(term, term, static_cast<unsigned long>(j), MPFR_RNDN);
            mpfr_add(s, s, term, MPFR_RNDN);
        }
        mpfr_mul(g, g, s, MPFR_RNDN);
    };

    // threshold relative to the running maximum
    const long cut = -static_cast<long>(prec) - 16;
    for (int dir : {1, -1})
    {
        M prev(prec);
        mpfr_set_inf(prev, 1);
        for (long k = (dir == 1 ? 0 : 1);; ++k)
        {
            long idx = dir * k;
            eval(idx);
            mpfr_add(sum_all, sum_all, g, MPFR_RNDN);
            if (idx % 2 == 0)
                mpfr_add(sum_even, sum_even, g, MPFR_RNDN);
            if (mpfr_cmp(g, gmax) > 0)
                mpfr_set(gmax, g, MPFR_RNDN);
            bool falling = mpfr_cmp(g, prev) < 0;
            mpfr_set(prev, g, MPFR_RNDN);
            if (falling && (mpfr_zero_p(g) || mpfr_get_exp(g) - mpfr_get_exp(gmax) < cut))
                break;
            if (k > 200000)
                throw ArithmeticError("kernel quadrature did not converge");
        }
    }
    // I_h and I_2h; the error at h is about the square of the relative error at 2h
    M ih(prec), i2h(prec);
    mpfr_mul_d(ih, sum_all, h, MPFR_RNDN);
    mpfr_mul_d(i2h, sum_even, 2 * h, MPFR_RNDN);
    double vi = mpfr_get_d(ih, MPFR_RNDN), v2 = mpfr_get_d(i2h, MPFR_RNDN);
    double rel2 = vi == 0 ? 0 : std::fabs((vi - v2) / vi);

    // prefactor 4 (2 pi)^{-(w+sigma)} x^{-sigma}
    M pre(prec);
    mpfr_mul_2ui(pre, pi, 1, MPFR_RNDN);
    mpfr_pow_si(pre, pre, -m, MPFR_RNDN);
    mpfr_mul_2ui(pre, pre, 2, MPFR_RNDN);
    mpfr_pow_si(t, x, -sigma, MPFR_RNDN);
    mpfr_mul(pre, pre, t, MPFR_RNDN);

    KernelValue kv{BigFloat(prec), 0};
    mpfr_mul(kv.value.get(), ih, pre, MPFR_RNDN);
    mpfr_mul(kv.value.get(), kv.value.get(), fact, MPFR_RNDN);
    double val = std::fabs(kv.value.to_double());
    kv.quad_err = val * (rel2 * rel2 + std::ldexp(1.0, -static_cast<int>(prec) + 8));
    kv.value.err = kv.quad_err;
    return kv;
}

// Gamma_R(s+1) Gamma_C(s+w)
BigFloat gamma_factor(int s, int w, mpfr_prec_t prec)
{
    M pi(prec), a(prec), t(prec);
    BigFloat r(prec);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_si(a, s + 1, MPFR_RNDN);
    mpfr_div_2ui(a, a, 1, MPFR_RNDN);
    mpfr_gamma(r.get(), a, MPFR_RNDN);
    mpfr_neg(a, a, MPFR_RNDN);
    mpfr_pow(t, pi, a, MPFR_RNDN);
    mpfr_mul(r.get(), r.get(), t, MPFR_RNDN);
    mpfr_set_si(a, s + w, MPFR_RNDN);
    mpfr_gamma(t, a, MPFR_RNDN);
    mpfr_mul(r.get(), r.get(), t, MPFR_RNDN);
    mpfr_mul_2ui(t, pi, 1, MPFR_RNDN);
    mpfr_pow_si(t, t, -(s + w), MPFR_RNDN);
    mpfr_mul(r.get(), r.get(), t, MPFR_RNDN);
    mpfr_mul_2ui(r.get(), r.get(), 1, MPFR_RNDN);
    r.err = ulp_err(r) * 16;
    return r;
}

void check_s(int s, int w)
{
    if (s < 1 || w + 1 - s < 1)
        throw std::invalid_argument("s must satisfy 1 <= s <= 2k-9");
}

// A^s F_s(nA) + A^{s-1} F_{1-s}(n/A), both values in the pair
std::pair<BigFloat, double> split_term(int w, int s, double n, double A, mpfr_prec_t prec)
{
    M x(prec), a(prec), t(prec);
    mpfr_set_d(a, A, MPFR_RNDN);
    mpfr_set_d(x, n, MPFR_RNDN);
    mpfr_mul(x, x, a, MPFR_RNDN);
    KernelValue k1 = kernel(w, s, x, prec);
    mpfr_set_d(x, n, MPFR_RNDN);
    mpfr_div(x, x, a, MPFR_RNDN);
    KernelValue k2 = kernel(w, 1 - s, x, prec);
    BigFloat r(prec);
    mpfr_pow_si(t, a, s, MPFR_RNDN);
    mpfr_mul(r.get(), k1.value.get(), t, MPFR_RNDN);
    double f = mpfr_get_d(t, MPFR_RNDN);
    mpfr_pow_si(t, a, s - 1, MPFR_RNDN);
    double g = mpfr_get_d(t, MPFR_RNDN);
    mpfr_fma(r.get(), k2.value.get(), t, r.get(), MPFR_RNDN);
    r.err = f * k1.quad_err + g * k2.quad_err + ulp_err(r) * 4;
    return {r, std::fabs(r.to_double())};
}

} // namespace

std::size_t sym2_terms_needed(int k, int s, int digits, double A)
{
    const int w = 2 * k - 9;
    check_s(s, w);
    if (!(A > 0))
        throw std::invalid_argument("A must be positive");
    mpfr_prec_t prec = working_precision(digits);
    double scale = std::fabs(gamma_factor(s, w, prec).to_double());
    double eps = scale * std::ldexp(1.0, -static_cast<int>(prec) - 10);
    for (std::size_t n = 1;; n += (n < 16 ? 1 : n / 16))
    {
        double mag = split_term(w, s, static_cast<double>(n), A, prec).second;
        // d_3(n) <= 4n, and the tail is dominated by its first terms
        if (mag * 4.0 * static_cast<double>(n) * static_cast<double>(n) < eps)
            return n;
        if (n > 1000000)
            throw ArithmeticError("smoothed series does not converge");
    }
}

BigFloat sym2_lvalue(const EigenData& e, int s, const LValueOptions& opt)
{
    const int w = e.motivic_weight();
    check_s(s, w);
    const mpfr_prec_t prec = working_precision(opt.digits);
    const std::size_t N = sym2_terms_needed(e.k, s, opt.digits, opt.A);
    if (!e.covers(N))
        throw std::invalid_argument("need more eigenvalues");
    auto b = sym2_dirichlet_coeffs(e, N);

    std::vector<BigFloat> terms(N + 1, BigFloat(prec));
    std::vector<std::string> errors(N + 1);
    auto work = [&](long n) {
        try
        {
            auto [kv, mag] = split_term(w, s, static_cast<double>(n), opt.A, prec);
            (void)mag;
            BigFloat bn = BigFloat::from_rational(b[static_cast<std::size_t>(n)], prec);
            terms[static_cast<std::size_t>(n)] = bn * kv;
        }
        catch (const std::exception& ex)
        {
            errors[static_cast<std::size_t>(n)] = ex.what();
        }
    };
    if (opt.exec == Exec::parallel)
    {
#pragma omp parallel for schedule(dynamic, 1)
        for (long n = 1; n <= static_cast<long>(N); ++n)
            work(n);
    }
    else
    {
        for (long n = 1; n <= static_cast<long>(N); ++n)
            work(n);
    }
    for (const auto& er : errors)
        if (!er.empty())
            throw ArithmeticError(er);

    // fixed ascending summation order
    BigFloat lambda(prec);
    double err = 0;
    for (std::size_t n = 1; n <= N; ++n)
    {
        mpfr_add(lambda.get(), lambda.get(), terms[n].get(), MPFR_RNDN);
        err += terms[n].err;
    }
    double tail = split_term(w, s, static_cast<double>(N + 1), opt.A, prec).second;
    err += tail * 40.0 * static_cast<double>(N + 1) * static_cast<double>(N + 1);
    err += ulp_err(lambda) * static_cast<double>(N);
    lambda.err = err;
    return lambda / gamma_factor(s, w, prec);
}

BigFloat sym2_lvalue_plain(const EigenData& e, int s, std::size_t N, int digits)
{
    if (s < 3)
        throw std::invalid_argument("the plain sum needs s >= 3");
    const mpfr_prec_t prec = working_precision(digits);
    auto b = sym2_dirichlet_coeffs(e, N);
    BigFloat r(prec);
    M t(prec), q(prec);
    for (std::size_t n = 1; n <= N; ++n)
    {
        if (b[n] == 0)
            continue;
        mpfr_set_q(q, b[n].get_mpq_t(), MPFR_RNDN);
        mpfr_set_ui(t, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_pow_si(t, t, -s, MPFR_RNDN);
        mpfr_fma(r.get(), q, t, r.get(), MPFR_RNDN);
    }
    // |b(n)| <= d_3(n) <= 4n
    double tail = 4.0 * std::pow(static_cast<double>(N), 2.0 - s) / (s - 2);
    r.err = tail + ulp_err(r) * static_cast<double>(N);
    return r;
}

BigFloat sym2_euler_product(const EigenData& e, int s, unsigned long P, int digits)
{
    if (s < 2)
        throw std::invalid_argument("the Euler product needs s >= 2");
    const mpfr_prec_t prec = working_precision(digits);
    BigFloat r(prec);
    mpfr_set_ui(r.get(), 1, MPFR_RNDN);
    M x(prec), s2(prec), f(prec), t(prec);
    for (unsigned long p : primes_up_to(P))
    {
        Integer a = e.at(p);
        Rational q = Rational(a * a) / Rational(integer_pow(p, static_cast<unsigned long>(e.motivic_weight()))) - 2;
        mpfr_set_q(s2, q.get_mpq_t(), MPFR_RNDN);
        mpfr_set_ui(x, p, MPFR_RNDN);
        mpfr_pow_si(x, x, -s, MPFR_RNDN);
        // (1 - x)(1 - s2 x + x^2)
        mpfr_mul(t, s2, x, MPFR_RNDN);
        mpfr_ui_sub(f, 1, t, MPFR_RNDN);
        mpfr_sqr(t, x, MPFR_RNDN);
        mpfr_add(f, f, t, MPFR_RNDN);
        mpfr_ui_sub(t, 1, x, MPFR_RNDN);
        mpfr_mul(f, f, t, MPFR_RNDN);
        mpfr_div(r.get(), r.get(), f, MPFR_RNDN);
    }
    double tail = 4.0 * std::pow(static_cast<double>(P), 1.0 - s) / (s - 1);
    r.err = std::fabs(r.to_double()) * std::expm1(tail) + ulp_err(r) * static_cast<double>(P);
    return r;
}

PeriodResult period(int k, const EigenData& e, int digits, Exec exec)
{
    if (k != e.k)
        throw std::invalid_argument("k does not match the eigenvalue data");
    const mpfr_prec_t prec = working_precision(digits);
    PeriodResult out{BigFloat(prec), gamma_k(k), {BigFloat(prec), BigFloat(prec), BigFloat(prec)}, -6 * k - 3};
    LValueOptions opt;
    opt.digits = digits;
    opt.exec = exec;
    int idx = 0;
    for (int s : {1, 5, 9})
        out.lvalues[static_cast<std::size_t>(idx++)] = sym2_lvalue(e, s, opt);
    BigFloat pip(prec);
    mpfr_const_pi(pip.get(), MPFR_RNDN);
    mpfr_pow_si(pip.get(), pip.get(), out.pi_power, MPFR_RNDN);
    pip.err = ulp_err(pip) * 8;
    out.value = BigFloat::from_rational(out.gamma_k, prec) * pip * out.lvalues[0] * out.lvalues[1] * out.lvalues[2];
    return out;
}

std::optional<Rational> reconstruct(const BigFloat& x, int digits)
{
    if (mpfr_zero_p(x.get()))
        return Rational(0);
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x.get());
    Rational xq(q);
    mpq_clear(q);
    Rational bound = abs(xq) / Rational(integer_pow(10, static_cast<unsigned long>(digits - 2)));
    // spurious convergents within the bound need denominators near bound^{-1/2}
    double md = 0.01 / std::sqrt(bound.get_d());
    Integer max_den(md > 1e300 ? 1e300 : md);
    if (max_den < 1)
        max_den = 1;
    return rational_reconstruct(xq, bound, max_den);
}

ProbeResult rationality_probe(const EigenData& e, const std::vector<int>& digits, double perturb_l1, Exec exec)
{
    if (digits.empty())
        throw std::invalid_argument("need at least one precision");
    ProbeResult out;
    out.digits = digits;
    std::vector<std::optional<Rational>> got5, got9;
    for (int d : digits)
    {
        const mpfr_prec_t prec = working_precision(d);
        LValueOptions opt;
        opt.digits = d;
        opt.exec = exec;
        BigFloat l1 = sym2_lvalue(e, 1, opt), l5 = sym2_lvalue(e, 5, opt), l9 = sym2_lvalue(e, 9, opt);
        if (perturb_l1 != 0)
        {
            BigFloat f(prec);
            mpfr_set_d(f.get(), 1.0 + perturb_l1, MPFR_RNDN);
            l1 = l1 * f;
        }
        BigFloat p8(prec), p16(prec);
        mpfr_const_pi(p8.get(), MPFR_RNDN);
        mpfr_pow_ui(p16.get(), p8.get(), 16, MPFR_RNDN);
        mpfr_pow_ui(p8.get(), p8.get(), 8, MPFR_RNDN);
        BigFloat r5 = l5 / (l1 * p8), r9 = l9 / (l1 * p16);
        got5.push_back(reconstruct(r5, d));
        got9.push_back(reconstruct(r9, d));
        out.rho.emplace_back(r5, r9);
    }
    auto agree = [](const std::vector<std::optional<Rational>>& v) -> std::optional<Rational> {
        for (const auto& x : v)
            if (!x || *x != *v.front())
                return std::nullopt;
        return v.front();
    };
    out.r5 = agree(got5);
    out.r9 = agree(got9);
    return out;
}

nlohmann::json to_json(const BigFloat& x, int digits)
{
    char eb[32];
    std::snprintf(eb, sizeof eb, "%.3e", x.err);
    return {{"value", x.str(digits)}, {"error_bound", std::string(eb)}};
}

} // namespace heptalift
