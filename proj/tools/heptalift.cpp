// heptalift command line: one subcommand per operation, JSON on stdout.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "heptalift/acceptance.hpp"
#include "heptalift/census.hpp"
#include "heptalift/density.hpp"
#include "heptalift/genfun.hpp"
#include "heptalift/lift.hpp"
#include "heptalift/lvalue.hpp"
#include "heptalift/siegel.hpp"

using namespace heptalift;
using json = nlohmann::json;

namespace
{

// input problems map to exit 2, like malformed flags
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// a verification ran and did not hold
struct CheckFailed : std::runtime_error
{
    json payload;
    CheckFailed(const std::string& what, json p) : std::runtime_error(what), payload(std::move(p)) {}
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try
    {
        return json::parse(in);
    }
    catch (const json::parse_error& e)
    {
        throw UsageError(path + ": malformed JSON: " + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& s, std::size_t want = 0)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
    {
        try
        {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        }
        catch (const std::exception&)
        {
            throw UsageError("expected a comma separated integer list, got '" + s + "'");
        }
    }
    if (want && out.size() != want)
        throw UsageError("expected " + std::to_string(want) + " integers, got '" + s + "'");
    return out;
}

json divisors_json(const ElemDivisors& d)
{
    return json::array({d.a1, d.a2, d.a3});
}

json genus_json(const std::map<unsigned long, ElemDivisors>& g)
{
    json o = json::object();
    for (const auto& [p, d] : g)
        o[std::to_string(p)] = divisors_json(d);
    return o;
}

json poly_coefficients(const LaurentQ& f, int lo, int hi)
{
    json a = json::array();
    for (int e = lo; e <= hi; ++e)
        a.push_back(to_string(f.coeff(e)));
    return a;
}

void require_prime(unsigned long p)
{
    if (!is_prime(p))
        throw UsageError(std::to_string(p) + " is not prime");
}

EigenData load_eigen(const std::string& source, int k, unsigned long need)
{
    if (source == "tau")
    {
        if (k != 10)
            throw UsageError("the built-in eigenvalues are those of Delta (k = 10)");
        return eigen_delta(std::max<unsigned long>(need, 2));
    }
    EigenData e = eigen_from_csv(source, k);
    if (need >= 2 && !e.covers(need))
        throw UsageError("need more eigenvalues: " + source + " must list every prime up to " + std::to_string(need));
    return e;
}

void emit(const json& j, const std::string& out)
{
    std::string text = j.dump(2) + "\n";
    if (out.empty())
    {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw UsageError("cannot write " + out);
    f << text;
}

int fail(const char* kind, const std::string& message, int code, const json& extra = nullptr)
{
    json e = {{"error", {{"kind", kind}, {"message", message}}}};
    if (!extra.is_null())
        e["error"]["result"] = extra;
    std::fprintf(stderr, "%s\n", e.dump().c_str());
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact arithmetic and verification tools for the exceptional Jordan algebra and its Ikeda-type lifts"};
    app.require_subcommand(1);
    std::string out;
    int threads = 0;
    if (const char* env = std::getenv("HEPTALIFT_THREADS"))
        threads = std::atoi(env);
    app.add_option("--out", out, "write the JSON result to this file");
    app.add_option("--threads", threads, "worker threads (default: HEPTALIFT_THREADS or all cores)");

    json result;
    std::function<void()> action;
    auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

    // reduce
    unsigned long prime = 2;
    int precision = 0;
    std::string input;
    {
        auto* c = sub("reduce", "elementary divisors of T at p");
        c->add_option("--prime", prime)->required();
        c->add_option("--precision", precision, "work modulo p^N (default ord_p det + 1)");
        c->add_option("--input", input, "JSON file with the element T")->required();
        c->callback([&] {
            action = [&] {
                require_prime(prime);
                JordanElement<Integer> T = jordan_from_json(read_json_file(input));
                std::optional<int> N;
                if (precision > 0)
                    N = precision;
                ElemDivisors d = elementary_divisors(T, prime, N);
                result = {{"prime", prime}, {"divisors", divisors_json(d)}, {"ord_det", d.sum()}};
            };
        });
    }
    // siegel
    std::string mlist, eval;
    {
        auto* c = sub("siegel", "Siegel series polynomial f(X) for exponents m = (m1,m2,m3)");
        c->add_option("--prime", prime)->required();
        c->add_option("--m", mlist, "m1,m2,m3")->required();
        c->add_option("--eval", eval, "evaluate at X=r");
        c->callback([&] {
            action = [&] {
                require_prime(prime);
                auto m = parse_int_list(mlist, 3);
                SiegelPoly s = f_poly(prime, m[0], m[1], m[2]);
                LaurentQ tf = tilde_f(s);
                result = {{"prime", prime},
                          {"m", m},
                          {"degree", s.degree()},
                          {"coefficients", poly_coefficients(s.poly, 0, s.degree())},
                          {"tilde_f", {{"min_exponent", -s.degree()},
                                       {"coefficients", poly_coefficients(tf, -s.degree(), s.degree())}}}};
                if (!eval.empty())
                {
                    auto eq = eval.find('=');
                    if (eq == std::string::npos || eval.substr(0, eq) != "X")
                        throw UsageError("--eval expects X=r");
                    Rational x;
                    try
                    {
                        x = parse_rational(eval.substr(eq + 1));
                    }
                    catch (const std::exception&)
                    {
                        throw UsageError("--eval: cannot parse " + eval.substr(eq + 1));
                    }
                    Rational v = 0;
                    for (const auto& [e, c] : s.poly.terms())
                        v += c * rational_pow(x, e);
                    result["eval"] = {{"X", to_string(x)}, {"value", to_string(v)}};
                }
            };
        });
    }
    // density
    std::string divs;
    {
        auto* c = sub("density", "local density beta_p and alpha_p for elementary divisors");
        c->add_option("--prime", prime)->required();
        c->add_option("--divisors", divs, "a1,a2,a3")->required();
        c->callback([&] {
            action = [&] {
                require_prime(prime);
                auto a = parse_int_list(divs, 3);
                for (int v : a)
                    if (v < 0)
                        throw UsageError("divisor exponents must be nonnegative");
                ElemDivisors d = make_divisors(prime, a[0], a[1], a[2]);
                result = {{"prime", prime},
                          {"divisors", divisors_json(d)},
                          {"beta", to_string(beta_p(d))},
                          {"alpha", to_string(alpha_p(d))}};
            };
        });
    }
    // mass
    {
        auto* c = sub("mass", "mass of the genus of a positive definite T");
        c->add_option("--input", input)->required();
        c->callback([&] {
            action = [&] {
                JordanElement<Integer> T = jordan_from_json(read_json_file(input));
                if (!is_positive(T))
                    throw UsageError("T must be positive definite");
                result = {{"det", det(T).get_str()}, {"genus", genus_json(genus_invariants(T))}, {"mass", to_string(mass(T))}};
            };
        });
    }
    // igusa-verify
    int order = 12;
    {
        auto* c = sub("igusa-verify", "sum over divisor classes of 1/beta against its product form");
        c->add_option("--prime", prime)->required();
        c->add_option("--order", order, "truncation degree in u")->check(CLI::Range(0, 200));
        c->callback([&] {
            action = [&] {
                require_prime(prime);
                IgusaReport r = igusa_verify(prime, order);
                json co = json::array();
                for (const auto& [l, rr] : r.coefficients)
                    co.push_back({{"sum", to_string(l)}, {"closed", to_string(rr)}});
                result = {{"prime", prime}, {"order", order}, {"ok", r.ok}, {"coefficients", co}};
                if (!r.ok)
                    throw CheckFailed("Igusa series mismatch at u^" + std::to_string(r.first_mismatch), result);
            };
        });
    }
    // hp-verify
    int tmax = 10;
    bool serial = false;
    {
        auto* c = sub("hp-verify", "closed form of H_p against the lambda sum and the 64-term route");
        c->add_option("--prime", prime)->required();
        c->add_option("--tmax", tmax, "truncation degree in t")->check(CLI::Range(0, 60));
        c->add_flag("--serial", serial, "run the serial reference");
        c->callback([&] {
            action = [&] {
                require_prime(prime);
                HpReport r = hp_verify(prime, tmax, serial ? Exec::serial : Exec::parallel);
                json co = json::array();
                for (const auto& f : r.coefficients)
                    co.push_back(f.str());
                result = {{"prime", prime}, {"tmax", tmax}, {"ok", r.ok}, {"coefficients", co}};
                if (!r.ok)
                    throw CheckFailed("H_p mismatch at t^" + std::to_string(r.first_mismatch) + " (" + r.failed_route + ")",
                                      result);
            };
        });
    }
    // gamma-k
    int k = 10;
    bool derived = false;
    {
        auto* c = sub("gamma-k", "rational constant in the period formula");
        c->add_option("--k", k)->required()->check(CLI::Range(10, 200));
        c->add_flag("--derived", derived, "also derive it from the Rankin-Selberg residue");
        c->callback([&] {
            action = [&] {
                result = {{"k", k}, {"gamma_k", to_string(gamma_k(k))}, {"pi_power", -6 * k - 3}};
                if (derived)
                {
                    Rational d = gamma_k_derived(k);
                    result["derived"] = to_string(d);
                    result["residue"] = rs_closed_residue(k).to_json();
                    result["agree"] = d == gamma_k(k);
                    if (d != gamma_k(k))
                        throw CheckFailed("derived gamma_k differs", result);
                }
            };
        });
    }
    // lift-coeff
    std::string eigen = "tau";
    {
        auto* c = sub("lift-coeff", "Fourier coefficient of the lift at T");
        c->add_option("--k", k)->required()->check(CLI::Range(10, 200));
        c->add_option("--eigen", eigen, "tau (built-in Delta) or a CSV file p,a_p");
        c->add_option("--input", input)->required();
        c->callback([&] {
            action = [&] {
                JordanElement<Integer> T = jordan_from_json(read_json_file(input));
                if (!is_positive(T))
                    throw UsageError("T must be positive definite");
                auto genus = genus_invariants(T);
                unsigned long need = genus.empty() ? 2 : genus.rbegin()->first;
                EigenData e = load_eigen(eigen, k, need);
                result = {{"k", k}, {"det", det(T).get_str()}, {"genus", genus_json(genus)},
                          {"coefficient", to_string(lift_coefficient(genus, e))}};
            };
        });
    }
    // lift-table
    unsigned long max_det = 20;
    {
        auto* c = sub("lift-table", "coefficients for every genus pattern with det <= D");
        c->add_option("--k", k)->check(CLI::Range(10, 200));
        c->add_option("--max-det", max_det)->required()->check(CLI::Range(1ul, 100000ul));
        c->add_option("--eigen", eigen, "tau (built-in Delta) or a CSV file p,a_p");
        c->callback([&] {
            action = [&] {
                EigenData e = load_eigen(eigen, k, max_det);
                json rows = json::array();
                for (const auto& r : lift_table(e, max_det))
                    rows.push_back(to_json(r));
                result = {{"k", k}, {"max_det", max_det}, {"rows", rows}};
            };
        });
    }
    // rs-euler
    {
        auto* c = sub("rs-euler", "Euler factor of the Rankin-Selberg series in zeta and Sym^2 factors");
        c->add_option("--prime", prime)->required();
        c->callback([&] {
            action = [&] {
                require_prime(prime);
                RsEulerReport r = rs_euler_check(prime);
                result = {{"prime", prime}, {"ok", r.ok}, {"zeta_inverse", r.zeta_inverse}, {"zeta_sym2", r.zeta_sym2}};
                if (!r.ok)
                    throw CheckFailed("Euler factor does not match", result);
            };
        });
    }
    // period
    int digits = 20;
    {
        auto* c = sub("period", "Petersson norm of the lift from L(1), L(5), L(9) of Sym^2");
        c->add_option("--k", k)->required()->check(CLI::Range(10, 200));
        c->add_option("--digits", digits)->check(CLI::Range(5, 50));
        c->add_option("--eigen", eigen, "tau (built-in Delta) or a CSV file p,a_p");
        c->add_flag("--serial", serial, "run the serial reference");
        c->callback([&] {
            action = [&] {
                unsigned long need = 0;
                for (int s : {1, 5, 9})
                    need = std::max<unsigned long>(need, sym2_terms_needed(k, s, digits));
                EigenData e = load_eigen(eigen, k, need);
                PeriodResult r = period(k, e, digits, serial ? Exec::serial : Exec::parallel);
                json lv = json::array();
                int idx = 0;
                for (int s : {1, 5, 9})
                {
                    json one = to_json(r.lvalues[static_cast<std::size_t>(idx++)], digits);
                    one["s"] = s;
                    lv.push_back(one);
                }
                json v = to_json(r.value, digits);
                result = {{"k", k},
                          {"digits", digits},
                          {"value", v["value"]},
                          {"error_bound", v["error_bound"]},
                          {"gamma_k", to_string(r.gamma_k)},
                          {"pi_power", r.pi_power},
                          {"lvalues", lv}};
            };
        });
    }
    // probe
    std::string digit_list = "20,30";
    double perturb = 0;
    {
        auto* c = sub("probe", "rational reconstruction of L(5)/(L(1) pi^8) and L(9)/(L(1) pi^16)");
        c->add_option("--k", k)->required()->check(CLI::Range(10, 200));
        c->add_option("--digits", digit_list, "comma separated precisions");
        c->add_option("--eigen", eigen, "tau (built-in Delta) or a CSV file p,a_p");
        c->add_option("--perturb-l1", perturb, "relative perturbation of L(1), as a negative control");
        c->callback([&] {
            action = [&] {
                auto ds = parse_int_list(digit_list);
                if (ds.empty())
                    throw UsageError("--digits needs at least one value");
                unsigned long need = 0;
                for (int d : ds)
                {
                    if (d < 5 || d > 50)
                        throw UsageError("digits must lie in 5..50");
                    for (int s : {1, 5, 9})
                        need = std::max<unsigned long>(need, sym2_terms_needed(k, s, d));
                }
                EigenData e = load_eigen(eigen, k, need);
                ProbeResult r = rationality_probe(e, ds, perturb);
                json samples = json::array();
                for (std::size_t i = 0; i < ds.size(); ++i)
                    samples.push_back({{"digits", ds[i]},
                                       {"rho5", to_json(r.rho[i].first, ds[i])},
                                       {"rho9", to_json(r.rho[i].second, ds[i])}});
                result = {{"k", k},
                          {"digits", ds},
                          {"rho5", r.r5 ? json(to_string(*r.r5)) : json(nullptr)},
                          {"rho9", r.r9 ? json(to_string(*r.r9)) : json(nullptr)},
                          {"samples", samples}};
            };
        });
    }
    // census
    bool reference = false;
    std::uint64_t samples = 1000000, seed = 1;
    {
        auto* c = sub("census", "rank strata of J(F_2) by exhaustion, or a sampler at p = 3");
        c->add_option("--prime", prime)->required();
        c->add_option("--threads", threads);
        c->add_flag("--reference", reference, "run the element-by-element reference");
        c->add_option("--samples", samples, "sample size at p = 3");
        c->add_option("--seed", seed);
        c->callback([&] {
            action = [&] {
                if (prime == 3)
                {
                    SampleReport s = census_f3_sample(samples, seed);
                    result = {{"prime", 3},      {"samples", s.samples}, {"nonsingular", s.nonsingular},
                              {"fraction", s.fraction}, {"expected", s.expected}, {"ci99", {s.low, s.high}},
                              {"consistent", s.consistent()}};
                    return;
                }
                if (prime != 2)
                    throw UsageError("exhaustive census is available at p = 2; p = 3 samples");
                CensusCounts counts = reference ? census_f2_reference() : census_f2(Exec::parallel, threads);
                result = to_json(counts);
                result["prime"] = 2;
                result["elapsed_seconds"] = counts.seconds;
                result["threads"] = reference ? 1 : (threads > 0 ? threads : omp_get_max_threads());
                result["expected_rank3"] = nonsingular_count(2).get_str();
                result["beta"] = to_string(beta_from_census(counts));
            };
        });
    }
    // selftest
    std::string only;
    {
        auto* c = sub("selftest", "run the acceptance suite");
        c->add_option("--only", only, "comma separated criterion numbers");
        c->callback([&] {
            action = [&] {
                std::vector<int> ids;
                if (!only.empty())
                    ids = parse_int_list(only);
                auto res = run_acceptance(stderr, ids);
                json arr = json::array();
                bool ok = true;
                for (const auto& r : res)
                {
                    arr.push_back(to_json(r));
                    ok &= r.passed();
                }
                result = {{"passed", ok}, {"criteria", arr}};
                if (!ok)
                    throw CheckFailed("acceptance suite failed", result);
            };
        });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        return fail("usage", e.what(), 2);
    }
    if (threads > 0)
        omp_set_num_threads(threads);

    try
    {
        action();
        emit(result, out);
        return 0;
    }
    catch (const UsageError& e)
    {
        return fail("usage", e.what(), 2);
    }
    catch (const CheckFailed& e)
    {
        emit(e.payload, out);
        return fail("check", e.what(), 1, e.payload);
    }
    catch (const json::exception& e)
    {
        return fail("input", e.what(), 2);
    }
    catch (const std::invalid_argument& e)
    {
        return fail("input", e.what(), 2);
    }
    catch (const std::out_of_range& e)
    {
        return fail("input", e.what(), 2);
    }
    catch (const std::exception& e)
    {
        return fail("computation", e.what(), 1);
    }
}
