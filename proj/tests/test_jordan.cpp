#include <doctest.h>

#include "heptalift/jordan.hpp"

using namespace heptalift;
using JZ = JordanElement<Integer>;
using JQ = JordanElement<Rational>;
using OZ = Octonion<Integer>;

namespace
{

JQ to_q(const JZ& X)
{
    JQ Y;
    Y.a = X.a;
    Y.b = X.b;
    Y.c = X.c;
    for (int k = 0; k < 8; ++k)
    {
        Y.x[k] = X.x[k];
        Y.y[k] = X.y[k];
        Y.z[k] = X.z[k];
    }
    return Y;
}

// t-coefficient of the cubic det(X + tY)
Integer det_linear_coefficient(const JZ& X, const JZ& Y)
{
    auto p = [&](long t) { return det(X + Y.scaled(Integer(t))); };
    Integer d1 = p(1) - p(-1), d2 = p(2) - p(-2);
    return (8 * d1 - d2) / 12;
}

} // namespace

TEST_CASE("determinant examples")
{
    CHECK(det(JZ::identity()) == 1);
    JZ X = JZ::diag(2, 2, 1);
    X.x = OZ::e(1);
    CHECK(det(X) == 3);
    CHECK(det(JZ::diag(4, 8, 32)) == 1024);
}

TEST_CASE("circ and inner product")
{
    std::mt19937_64 rng(3);
    JZ I = JZ::identity();
    CHECK(circ(I, I) == I);
    CHECK(inner(I, I) == 3);
    for (int n = 0; n < 50; ++n)
    {
        JQ X = to_q(random_jordan(rng, 3)), Y = to_q(random_jordan(rng, 3));
        CHECK(circ(X, to_q(I)) == X);
        CHECK(inner(X, Y) == trace(circ(X, Y)));
        CHECK(circ(X, Y) == circ(Y, X));
    }
    JZ A = JZ::diag(1, 0, 0), B;
    B.x = OZ::e(1);
    CHECK_THROWS_WITH(circ(A, B), "requires half-integral ring");
}

TEST_CASE("cross product")
{
    JZ D = JZ::diag(2, 3, 5);
    CHECK(cross(D, D) == JZ::diag(15, 10, 6));
    CHECK(cross(JZ::identity(), JZ::identity()) == JZ::identity());
    std::mt19937_64 rng(9);
    for (int n = 0; n < 100; ++n)
    {
        JZ X = random_jordan(rng, 3);
        JZ XX = cross(X, X);
        CHECK(cross(XX, XX) == X.scaled(det(X)));
        JQ Xq = to_q(X), Yq = to_q(random_jordan(rng, 3));
        // polarization: (X+Y)x(X+Y) = XxX + 2 XxY + YxY
        CHECK(cross(Xq + Yq, Xq + Yq) == cross(Xq, Xq) + cross(Xq, Yq).scaled(Rational(2)) + cross(Yq, Yq));
    }
}

TEST_CASE("directional derivative of det")
{
    std::mt19937_64 rng(21);
    for (int n = 0; n < 200; ++n)
    {
        JZ X = random_jordan(rng, 4), Y = random_jordan(rng, 4);
        CHECK(det_linear_coefficient(X, Y) == inner(cross(X, X), Y));
    }
}

TEST_CASE("generator actions")
{
    JZ D = JZ::diag(3, 5, 7);
    auto [g, nu] = apply_generator<Integer>({GammaToken<Integer>{Integer(-1)}}, D);
    CHECK(g == JZ::diag(-3, -5, -7));
    CHECK(nu == -1);

    OZ xi = OZ::basis(4) + OZ::basis(6);
    auto [m, nu2] = apply_generator<Integer>({MToken<Integer>{xi, 1, 0}}, D);
    CHECK(m.a == 3 + 5 * xi.norm());
    CHECK(nu2 == 1);

    JQ I = JQ::identity();
    auto [t, nu3] = apply_generator<Rational>({ThetaToken<Rational>{{Rational(2), Rational(3), Rational(1, 5)}}}, I);
    CHECK(t == JQ::diag(4, 9, Rational(1, 25)));
    CHECK(nu3 == Rational(36, 25));

    CHECK_THROWS_AS(apply_generator<Integer>({GammaToken<Integer>{Integer(2)}}, D), ArithmeticError);
}

TEST_CASE("det(gX) = nu det X")
{
    std::mt19937_64 rng(77);
    for (int n = 0; n < 200; ++n)
    {
        JZ X = random_jordan(rng, 3);
        std::uniform_int_distribution<int> len(1, 12);
        auto w = random_word(rng, len(rng));
        auto [gX, nu] = apply_generator(w, X);
        CHECK(det(gX) == nu * det(X));
    }
    std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
    for (const auto& s : perms)
    {
        JZ X = random_jordan(rng, 3);
        CHECK(det(apply_perm(X, s)) == det(X));
        CHECK(inner(apply_perm(X, s), apply_perm(X, s)) == inner(X, X));
    }
}

TEST_CASE("positivity")
{
    CHECK(is_positive(JZ::identity()));
    CHECK_FALSE(is_positive(JZ::diag(1, 1, -1)));
    CHECK_FALSE(is_positive(JZ::diag(-1, -1, 1)));
    std::mt19937_64 rng(5);
    int tested = 0;
    while (tested < 200)
    {
        JZ S = random_jordan(rng, 3);
        if (det(S) == 0)
            continue;
        ++tested;
        JZ S2 = circ(S, S);
        CHECK(is_positive(S2));
        CHECK_FALSE(is_positive(-S2));
    }
}

TEST_CASE("json round trip")
{
    std::mt19937_64 rng(1);
    JZ X = random_jordan(rng, 5);
    CHECK(jordan_from_json(to_json(X)) == X);
    CHECK(jordan_from_json(nlohmann::json::parse(R"({"diag":[1,"2",3]})")) == JZ::diag(1, 2, 3));
    CHECK_THROWS(jordan_from_json(nlohmann::json::parse(R"({"diag":[1,2]})")));
}
