#include <doctest.h>

#include "elk3/qdivisor.hpp"

using namespace elk3;

TEST_CASE("theta divisor identities") {
    for (int m = 1; m <= 8; ++m) {
        QDivisor th = theta_divisor(m);
        CHECK(qdiv_inner(th, th) == Rational(-1) + Rational(1, 2 * m));
        CHECK(qdiv_order_mod_lattice(th) == 2 * m);
        CHECK(qdiv_in_dual(th));
    }
    // m = 1: single coordinate 1/2 with norm -1/2
    QDivisor th1 = theta_divisor(1);
    CHECK(th1.coords == RatVector{Rational(1, 2)});
    CHECK(qdiv_inner(th1, th1) == Rational(-1, 2));
    CHECK_THROWS_AS(theta_divisor(0), Error);
}

TEST_CASE("theta pairs integrally with every chain component") {
    QDivisor th = theta_divisor(2);
    CHECK(th.coords == RatVector{Rational(1, 4), Rational(1, 2), Rational(3, 4)});
    for (int k = 0; k < 3; ++k) {
        RatVector e(3, Rational(0));
        e[static_cast<size_t>(k)] = 1;
        QDivisor basis = make_qdivisor(th.lattice, e);
        CHECK(is_integer(qdiv_inner(th, basis)));
    }
}

TEST_CASE("Gamma for the X_d families") {
    for (int d = 1; d <= 6; ++d) {
        QDivisor g = gamma_xd(d);
        CHECK(qdiv_inner(g, g) == Rational(-2) + Rational(1, 2 * d));
        CHECK(qdiv_order_mod_lattice(g) == 2 * d);
        CHECK(qdiv_in_dual(g));
    }
    CHECK_THROWS_AS(gamma_xd(7), Error);
}

TEST_CASE("Gamma for the X'_n families") {
    QDivisor g5 = gamma_xprime(5);
    CHECK(qdiv_inner(g5, g5) == Rational(-2) - Rational(7, 30));
    CHECK(qdiv_order_mod_lattice(g5) == 30);
    CHECK(qdiv_in_dual(g5));

    QDivisor g7 = gamma_xprime(7);
    CHECK(qdiv_inner(g7, g7) == Rational(-2) + Rational(1, 14));
    CHECK(qdiv_order_mod_lattice(g7) == 14);
    CHECK(qdiv_in_dual(g7));

    CHECK_THROWS_AS(gamma_xprime(6), Error);
}

TEST_CASE("mismatched ambient lattices are rejected") {
    QDivisor a = theta_divisor(1);
    QDivisor b = theta_divisor(2);
    CHECK_THROWS_WITH_AS(qdiv_inner(a, b), doctest::Contains("LatticeMismatch"), Error);
}
