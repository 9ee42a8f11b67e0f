#include <doctest.h>

#include "elk3/quadform.hpp"
#include "support/disc_oracle.hpp"

using namespace elk3;

namespace {

std::vector<Integer> factors_of(const FiniteQuadForm& F) { return F.factors; }

bool has_group(const std::vector<FiniteQuadForm>& forms, const std::vector<Integer>& factors) {
    for (const auto& f : forms)
        if (f.factors == factors) return true;
    return false;
}

}  // namespace

TEST_CASE("discriminant form of A2") {
    FiniteQuadForm F = discriminant_form(lattice_A(2));
    CHECK(factors_of(F) == std::vector<Integer>{3});
    // q(generator) = -2/3 mod 2Z = 4/3 for either generator
    CHECK(F.gen_gram[0][0] == Rational(4, 3));
}

TEST_CASE("discriminant form of M_3(2)") {
    FiniteQuadForm F = discriminant_form(rescale(lattice_Md(3), 2));
    CHECK(factors_of(F) == std::vector<Integer>{2, 2, 2, 2, 12});
}

TEST_CASE("discriminant group of M_d(2) is (Z/2)^4 x Z/4d") {
    for (int d = 1; d <= 8; ++d) {
        FiniteQuadForm F = discriminant_form(rescale(lattice_Md(d), 2));
        CHECK(factors_of(F) == std::vector<Integer>{2, 2, 2, 2, 4 * d});
    }
}

TEST_CASE("rank five lattice with discriminant group Z/30") {
    IntLattice M = direct_sum(direct_sum(lattice_U(), make_lattice({{2, 1}, {1, -2}})),
                              lattice_rank1(-6));
    CHECK(lattice_det(M) == -30);
    FiniteQuadForm F = discriminant_form(M);
    REQUIRE(factors_of(F) == std::vector<Integer>{30});
    // some generator takes the value 7/30 mod 2Z
    bool found = false;
    for (long k = 1; k < 30; ++k) {
        if (gcd(Integer(k), Integer(30)) != 1) continue;
        if (F.q({Integer(k)}) == Rational(7, 30)) found = true;
    }
    CHECK(found);
}

TEST_CASE("q is compatible with the bilinear form") {
    for (const IntLattice& L :
         {lattice_A(3), lattice_D(4), rescale(lattice_U(), 2), lattice_Md(2),
          rescale(lattice_Md(2), 2), lattice_nikulin(), lattice_rank1(-12)}) {
        FiniteQuadForm F = discriminant_form(L);
        REQUIRE(F.order() <= 512);
        auto elems = F.elements();
        for (const auto& x : elems)
            for (const auto& y : elems) {
                std::vector<Integer> xy(x.size());
                for (size_t i = 0; i < x.size(); ++i) xy[i] = x[i] + y[i];
                Rational lhs = mod_two(F.q(xy) - F.q(x) - F.q(y));
                Rational rhs = mod_two(2 * F.b(x, y));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("group order equals |det| and matches the oracle") {
    for (const IntLattice& L : {lattice_A(2), lattice_A(5), lattice_D(6), lattice_E7(),
                                lattice_Md(4), rescale(lattice_U(), 2)}) {
        FiniteQuadForm F = discriminant_form(L);
        CHECK(F.order() == abs(lattice_det(L)));
        auto oracle = testoracle::disc_oracle(L);
        CHECK(oracle.invariant_factors == F.factors);
        CHECK(oracle.order_q == quadform_fingerprint(F));
    }
}

TEST_CASE("element order predicate") {
    std::vector<Integer> g = {2, 2, 2, 2, 2, 2, 2, 2, 6};
    CHECK(has_element_of_order(g, 3));
    CHECK(has_element_of_order(g, 2));
    CHECK(has_element_of_order(g, 6));
    for (Integer d : {2, 4, 6})
        CHECK_FALSE(has_element_of_order({2, 2, 2, 2, 2, 2, 2, 2, d}, 2 * d));
    CHECK_FALSE(has_element_of_order({}, 5));
    CHECK(has_element_of_order({}, 1));
}

TEST_CASE("isotropic reduction of disc U(2)") {
    FiniteQuadForm F = discriminant_form(rescale(lattice_U(), 2));
    // q takes the values {0, 0, 1} on the three nonzero elements, so only
    // two of them reduce, both to the trivial form
    std::vector<Rational> qs;
    for (const auto& x : F.elements())
        if (!(x[0] == 0 && x[1] == 0)) qs.push_back(F.q(x));
    std::sort(qs.begin(), qs.end());
    CHECK(qs == std::vector<Rational>{0, 0, 1});
    auto reds = isotropic_reductions(F);
    REQUIRE(reds.size() == 1);
    CHECK(reds[0].factors.empty());
}

TEST_CASE("no isotropic element, no reductions") {
    FiniteQuadForm F = discriminant_form(lattice_A(1));  // q(g) = 3/2
    CHECK(isotropic_reductions(F).empty());
}

TEST_CASE("isotropic reductions of disc M_2(2)") {
    FiniteQuadForm F = discriminant_form(rescale(lattice_Md(2), 2));
    REQUIRE(F.order() == 128);
    auto reds = isotropic_reductions(F);
    for (const auto& r : reds) CHECK(r.order() == 32);
    CHECK(has_group(reds, {2, 2, 2, 2, 2}));
    CHECK(has_group(reds, {2, 2, 8}));
}

TEST_CASE("brute-force isomorphism of forms") {
    FiniteQuadForm u2 = discriminant_form(rescale(lattice_U(), 2));
    FiniteQuadForm a1a1 = discriminant_form(direct_sum(lattice_A(1), lattice_A(1)));
    CHECK(quadform_isomorphic(u2, u2));
    CHECK_FALSE(quadform_isomorphic(u2, a1a1));
    // A1(-1)-pair vs U(2): same group, different q multiset
    FiniteQuadForm v2 = discriminant_form(rescale(lattice_Md(1), 2));
    CHECK(quadform_isomorphic(v2, v2));
}
