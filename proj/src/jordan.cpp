#include "heptalift/jordan.hpp"

#include <algorithm>

namespace heptalift
{

Octonion<Integer> random_octonion(std::mt19937_64& rng, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    Octonion<Integer> o;
    for (int k = 0; k < 8; ++k)
        o[k] = d(rng);
    return o;
}

JordanElement<Integer> random_jordan(std::mt19937_64& rng, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    JordanElement<Integer> X;
    X.a = d(rng);
    X.b = d(rng);
    X.c = d(rng);
    X.x = random_octonion(rng, bound);
    X.y = random_octonion(rng, bound);
    X.z = random_octonion(rng, bound);
    return X;
}

namespace
{

GeneratorToken<Integer> random_token(std::mt19937_64& rng, int xi_bound, bool allow_gamma)
{
    std::uniform_int_distribution<int> kind(0, allow_gamma ? 3 : 2);
    std::uniform_int_distribution<int> idx(0, 2), sign(0, 1);
    switch (kind(rng))
    {
    case 0:
    {
        int i = idx(rng), j = idx(rng);
        while (j == i)
            j = idx(rng);
        return MToken<Integer>{random_octonion(rng, xi_bound), i, j};
    }
    case 1:
    {
        std::array<int, 3> s{0, 1, 2};
        std::shuffle(s.begin(), s.end(), rng);
        return PermToken{s};
    }
    case 2:
    {
        ThetaToken<Integer> t;
        for (auto& r : t.r)
            r = sign(rng) ? 1 : -1;
        return t;
    }
    default:
        return GammaToken<Integer>{Integer(-1)};
    }
}

} // namespace

GeneratorWord<Integer> random_unimodular_word(std::mt19937_64& rng, int length, int xi_bound)
{
    GeneratorWord<Integer> w;
    for (int n = 0; n < length; ++n)
        w.push_back(random_token(rng, xi_bound, false));
    return w;
}

GeneratorWord<Integer> random_word(std::mt19937_64& rng, int length, int xi_bound)
{
    GeneratorWord<Integer> w;
    for (int n = 0; n < length; ++n)
        w.push_back(random_token(rng, xi_bound, true));
    return w;
}

namespace
{

Integer read_integer(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return Integer(v.get<long>());
    if (v.is_string())
    {
        Rational q = parse_rational(v.get<std::string>());
        if (q.get_den() != 1)
            throw std::invalid_argument("expected an integer, got " + v.get<std::string>());
        return q.get_num();
    }
    throw std::invalid_argument("expected an integer entry");
}

Octonion<Integer> read_octonion(const nlohmann::json& j, const char* key)
{
    Octonion<Integer> o;
    if (!j.contains(key))
        return o;
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != 8)
        throw std::invalid_argument(std::string("field '") + key + "' must be an array of 8 integers");
    for (int k = 0; k < 8; ++k)
        o[k] = read_integer(arr.at(static_cast<std::size_t>(k)));
    return o;
}

nlohmann::json write_integer(const Integer& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

} // namespace

JordanElement<Integer> jordan_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("diag"))
        throw std::invalid_argument("Jordan element needs a 'diag' field");
    const auto& d = j.at("diag");
    if (!d.is_array() || d.size() != 3)
        throw std::invalid_argument("field 'diag' must be an array of 3 integers");
    JordanElement<Integer> X;
    X.a = read_integer(d[0]);
    X.b = read_integer(d[1]);
    X.c = read_integer(d[2]);
    X.x = read_octonion(j, "x");
    X.y = read_octonion(j, "y");
    X.z = read_octonion(j, "z");
    return X;
}

nlohmann::json to_json(const JordanElement<Integer>& X)
{
    auto oct = [](const Octonion<Integer>& o) {
        nlohmann::json a = nlohmann::json::array();
        for (int k = 0; k < 8; ++k)
            a.push_back(write_integer(o[k]));
        return a;
    };
    return {{"diag", {write_integer(X.a), write_integer(X.b), write_integer(X.c)}},
            {"x", oct(X.x)},
            {"y", oct(X.y)},
            {"z", oct(X.z)}};
}

} // namespace heptalift
