#include <doctest.h>

#include <random>

#include "elk3/lattice.hpp"
#include "support/disc_oracle.hpp"

using namespace elk3;

namespace {

IntMatrix matmul(const IntMatrix& A, const IntMatrix& B) {
    size_t n = A.size(), m = B[0].size(), k = B.size();
    IntMatrix C(n, std::vector<Integer>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            for (size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
    return C;
}

}  // namespace

TEST_CASE("standard lattice determinants") {
    CHECK(lattice_det(lattice_A(2)) == 3);
    CHECK(lattice_det(lattice_A(1)) == -2);
    CHECK(lattice_det(lattice_D(4)) == 4);
    CHECK(lattice_det(lattice_D(14)) == 4);
    CHECK(lattice_det(lattice_E7()) == -2);
    CHECK(lattice_det(lattice_E8()) == 1);
    CHECK(lattice_det(lattice_U()) == -1);
    CHECK(lattice_det(lattice_Md(5)) == -10);
    CHECK(lattice_det(lattice_nikulin()) == 64);
    CHECK_THROWS_AS(lattice_A(0), Error);
    CHECK_THROWS_AS(lattice_rank1(0), Error);
    CHECK_THROWS_AS(lattice_rank1(3), Error);
}

TEST_CASE("rescale") {
    IntLattice u2 = rescale(lattice_U(), 2);
    CHECK(u2.gram == IntMatrix{{0, 2}, {2, 0}});
    // det M_15(2) = 2^5 det M_15
    CHECK(lattice_det(rescale(lattice_Md(15), 2)) == 32 * lattice_det(lattice_Md(15)));
    CHECK(rescale(lattice_E8(), 1).gram == lattice_E8().gram);
}

TEST_CASE("smith normal form on known matrices") {
    auto check_snf = [](const IntMatrix& m, const std::vector<Integer>& expect) {
        SnfResult s = smith_normal_form(m);
        CHECK(matmul(matmul(s.U, m), s.V) == s.D);
        CHECK(abs(int_det(s.U)) == 1);
        CHECK(abs(int_det(s.V)) == 1);
        std::vector<Integer> diag;
        for (size_t i = 0; i < m.size() && i < m[0].size(); ++i) diag.push_back(s.D[i][i]);
        for (size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        CHECK(diag == expect);
    };
    check_snf({{2, 0}, {0, 4}}, {2, 4});
    check_snf({{0, 2}, {2, 0}}, {2, 2});
    check_snf(lattice_E8().gram, {1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> dims(1, 5);
    for (int trial = 0; trial < 120; ++trial) {
        size_t r = static_cast<size_t>(dims(rng)), c = static_cast<size_t>(dims(rng));
        IntMatrix m(r, std::vector<Integer>(c));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        SnfResult s = smith_normal_form(m);
        CHECK(matmul(matmul(s.U, m), s.V) == s.D);
        CHECK(abs(int_det(s.U)) == 1);
        CHECK(abs(int_det(s.V)) == 1);
        for (size_t i = 0; i < std::min(r, c); ++i) {
            CHECK(s.D[i][i] >= 0);
            for (size_t j = 0; j < c; ++j)
                if (j != i && (j < std::min(r, c))) CHECK(s.D[i][j] == 0);
            if (i + 1 < std::min(r, c) && s.D[i][i] != 0)
                CHECK(s.D[i + 1][i + 1] % s.D[i][i] == 0);
        }
    }
}

TEST_CASE("oracle agrees on the named lattices") {
    for (const IntLattice& L : {lattice_A(2), lattice_A(4), lattice_D(4), lattice_D(5),
                                lattice_U(), rescale(lattice_U(), 2), lattice_rank1(-6),
                                lattice_rank1(8), direct_sum(lattice_A(1), lattice_A(3))}) {
        auto oracle = testoracle::disc_oracle(L);
        CHECK(oracle.group_order == abs(lattice_det(L)));
    }
}

TEST_CASE("direct sums and labels") {
    IntLattice s = direct_sum(lattice_A(2), lattice_U());
    CHECK(s.rank() == 4);
    CHECK(lattice_det(s) == -3);
    CHECK_THROWS_AS(make_lattice({{0, 1}, {2, 0}}), Error);
    CHECK_THROWS_AS(make_lattice({{1}}), Error);  // odd diagonal
    CHECK_THROWS_AS(make_lattice({{2, 1}, {1, 2}, {0, 0}}), Error);
}
