#include <doctest.h>

#include <random>

#include "elk3/unipoly.hpp"
#include "support/gen.hpp"

using namespace elk3;
using testgen::P;

TEST_CASE("arithmetic and evaluation") {
    UniPoly f = P({1, 0, 3});  // 3t^2 + 1
    UniPoly g = P({-1, 1});    // t - 1
    CHECK(f.eval(Rational(2)) == 13);
    CHECK((f * g).degree() == 3);
    CHECK((f - f).is_zero());
    CHECK_THROWS_WITH_AS((f - f).degree(), doctest::Contains("ZeroPolynomial"), Error);
    auto [q, r] = divrem(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() == 0);
    CHECK(f.str() == "3*t^2 + 1");
}

TEST_CASE("gcd examples") {
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));        // (t^2-1, t-1) = t-1
    CHECK(poly_gcd(P({0, 2, 0, 4}), UniPoly::zero()) ==
          UniPoly(std::vector<Rational>{0, Rational(1, 2), 0, 1}));  // monic(f)
    CHECK(poly_gcd(P({1, 0, 1}), P({-1, 0, 1})) == P({1}));          // coprime
    CHECK(poly_gcd(UniPoly::zero(), UniPoly::zero()).is_zero());
}

TEST_CASE("squarefree decomposition examples") {
    // t^3 (t - 1)
    auto parts = squarefree_decompose(P({0, 0, 0, -1, 1}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].factor == P({-1, 1}));
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[1].factor == P({0, 1}));
    CHECK(parts[1].multiplicity == 3);

    parts = squarefree_decompose(P({1, 2, 1}));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].factor == P({1, 1}));
    CHECK(parts[0].multiplicity == 2);

    // (t^2 - 2)^2 (t^3 - t)
    UniPoly f = P({-2, 0, 1}) * P({-2, 0, 1}) * P({0, -1, 0, 1});
    parts = squarefree_decompose(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].factor == P({0, -1, 0, 1}));
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[1].factor == P({-2, 0, 1}));
    CHECK(parts[1].multiplicity == 2);

    CHECK_THROWS_AS(squarefree_decompose(UniPoly::zero()), Error);
}

TEST_CASE("squarefree decomposition reconstructs the input") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        UniPoly f = testgen::random_poly(rng, 3);
        UniPoly g = testgen::random_poly(rng, 2);
        if (f.is_zero() || g.is_zero()) continue;
        UniPoly prod = f * f * g;  // force repeated factors
        auto parts = squarefree_decompose(prod);
        UniPoly rebuilt = UniPoly::constant(prod.lc());
        int last_mult = 0;
        for (const auto& p : parts) {
            CHECK(p.multiplicity > last_mult);
            last_mult = p.multiplicity;
            CHECK(is_squarefree(p.factor));
            rebuilt *= p.factor.pow(static_cast<unsigned>(p.multiplicity));
        }
        CHECK(rebuilt == prod);
    }
}

TEST_CASE("rational square roots") {
    auto s = is_square_rational(P({1, 2, 1}));
    REQUIRE(s.has_value());
    CHECK(*s == P({1, 1}));

    s = is_square_rational(P({0, 0, 0, 0, 0, 0, 16}));
    REQUIRE(s.has_value());
    CHECK(*s == P({0, 0, 0, 4}));

    CHECK_FALSE(is_square_rational(P({0, 0, 2})).has_value());   // lc 2 is not a square
    CHECK_FALSE(is_square_rational(P({0, 0, -1})).has_value());  // negative lc
    CHECK(is_square_rational(UniPoly::zero()).has_value());
}

TEST_CASE("geometric squares") {
    CHECK(is_square_geometric(P({0, 0, 2})));        // 2t^2, sqrt(2) exists over C
    CHECK_FALSE(is_square_geometric(P({0, 0, 0, 1})));  // t^3

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly p3 = testgen::random_poly(rng, 3);
        if (p3.is_zero() || p3.degree() != 3) continue;
        UniPoly f = p3 * p3 - Rational(4) * UniPoly::monomial(5, 1);  // P^2 - 4t^5
        if (f.is_zero()) continue;
        CHECK_FALSE(is_square_geometric(f));
    }
}

TEST_CASE("rational square implies geometric square") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        UniPoly f = testgen::random_poly(rng, 4);
        if (f.is_zero()) continue;
        if (auto s = is_square_rational(f * f)) {
            CHECK(is_square_geometric(f * f));
            CHECK(*s * *s == f * f);
        } else {
            CHECK(false);
        }
    }
}

TEST_CASE("weighted reversal") {
    UniPoly a = P({1, 0, 0, 0, 2});  // 2t^4 + 1
    UniPoly r = a.reverse_weighted(4);
    CHECK(r == P({2, 0, 0, 0, 1}));
    CHECK_THROWS_AS(P({0, 0, 0, 0, 0, 1}).reverse_weighted(4), Error);
}

TEST_CASE("valuations") {
    CHECK(valuation_at(P({0, 0, 0, 2}), P({0, 1})) == 3);
    CHECK(valuation_at(P({1, 1}), P({0, 1})) == 0);
}
