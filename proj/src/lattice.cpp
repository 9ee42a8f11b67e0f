#include "elk3/lattice.hpp"

#include <algorithm>

#include "elk3/error.hpp"

namespace elk3 {

IntLattice make_lattice(IntMatrix gram, std::vector<std::string> labels) {
    size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw Error(errkind::BadInput, "Gram matrix is not square");
    for (size_t i = 0; i < n; ++i) {
        if (gram[i][i] % 2 != 0)
            throw Error(errkind::BadInput, "Gram diagonal must be even");
        for (size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                throw Error(errkind::BadInput, "Gram matrix is not symmetric");
    }
    if (n > 0 && int_det(gram) == 0)
        throw Error(errkind::DegenerateLattice, "Gram matrix is singular");
    if (labels.empty())
        for (size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    if (labels.size() != n) throw Error(errkind::BadInput, "label count mismatch");
    return {std::move(gram), std::move(labels)};
}

namespace {

IntMatrix zero_matrix(int n) {
    return IntMatrix(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n), 0));
}

}  // namespace

IntLattice lattice_A(int n) {
    if (n < 1) throw Error(errkind::InvalidParameter, "A_n needs n >= 1");
    IntMatrix g = zero_matrix(n);
    for (int i = 0; i < n; ++i) {
        g[i][i] = -2;
        if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("Theta" + std::to_string(i));
    return make_lattice(std::move(g), std::move(labels));
}

IntLattice lattice_D(int n) {
    if (n < 4) throw Error(errkind::InvalidParameter, "D_n needs n >= 4");
    // Chain v1 - v2 - ... - v_{n-1} with the fork v_n attached at v_{n-2}.
    IntMatrix g = zero_matrix(n);
    for (int i = 0; i < n; ++i) g[i][i] = -2;
    for (int i = 0; i + 1 < n - 1; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    g[n - 1][n - 3] = g[n - 3][n - 1] = 1;
    return make_lattice(std::move(g));
}

IntLattice lattice_E7() {
    // E8 diagram minus one end node; negative definite.
    IntMatrix g = zero_matrix(7);
    for (int i = 0; i < 7; ++i) g[i][i] = -2;
    // Chain 1-2-3-4-5-6 with node 7 attached at node 4 (1-based).
    for (int i = 0; i + 1 < 6; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    g[6][3] = g[3][6] = 1;
    return make_lattice(std::move(g));
}

IntLattice lattice_E8() {
    IntMatrix g = zero_matrix(8);
    for (int i = 0; i < 8; ++i) g[i][i] = -2;
    // Chain 1-2-3-4-5-6-7 with node 8 attached at node 5 (1-based).
    for (int i = 0; i + 1 < 7; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    g[7][4] = g[4][7] = 1;
    return make_lattice(std::move(g));
}

IntLattice lattice_U() {
    return make_lattice({{0, 1}, {1, 0}}, {"f", "g"});
}

IntLattice lattice_rank1(const Integer& k) {
    if (k == 0) throw Error(errkind::InvalidParameter, "<k> needs k != 0");
    if (k % 2 != 0) throw Error(errkind::InvalidParameter, "<k> must be even");
    return make_lattice({{k}});
}

IntLattice lattice_Md(int d) {
    if (d < 1) throw Error(errkind::InvalidParameter, "M_d needs d >= 1");
    return direct_sum(direct_sum(lattice_U(), lattice_U()), lattice_rank1(Integer(-2 * d)));
}

IntLattice lattice_nikulin() {
    // Basis e1..e7 together with h = (e1 + ... + e8)/2, e_i^2 = -2.
    IntMatrix g = zero_matrix(8);
    for (int i = 0; i < 7; ++i) {
        g[i][i] = -2;
        g[i][7] = g[7][i] = -1;
    }
    g[7][7] = -4;
    std::vector<std::string> labels = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "h"};
    return make_lattice(std::move(g), std::move(labels));
}

IntLattice rescale(const IntLattice& L, const Integer& k) {
    if (k == 0) throw Error(errkind::InvalidParameter, "rescale by zero");
    IntLattice out = L;
    for (auto& row : out.gram)
        for (auto& x : row) x *= k;
    return out;
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
    int n = a.rank(), m = b.rank();
    IntMatrix g = zero_matrix(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = a.gram[i][j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g[n + i][n + j] = b.gram[i][j];
    std::vector<std::string> labels = a.basis_labels;
    for (const auto& l : b.basis_labels) labels.push_back(l + "'");
    return {std::move(g), std::move(labels)};
}

Integer lattice_det(const IntLattice& L) { return int_det(L.gram); }

Integer int_det(const IntMatrix& M) {
    // Bareiss fraction-free elimination.
    size_t n = M.size();
    if (n == 0) return 1;
    IntMatrix a = M;
    Integer sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

RatMatrix rat_inverse(const IntMatrix& M) {
    size_t n = M.size();
    RatMatrix a(n, RatVector(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(M[i][j]);
        a[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error(errkind::DegenerateLattice, "matrix is singular");
        std::swap(a[col], a[piv]);
        Rational d = a[col][col];
        for (auto& x : a[col]) x /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    RatMatrix inv(n, RatVector(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

namespace {

struct SnfWork {
    IntMatrix a, u, v;
    size_t rows, cols;

    void swap_rows(size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(size_t i, size_t j) {
        for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
    }
    void add_row(size_t dst, size_t src, const Integer& f) {  // row dst += f * row src
        for (size_t c = 0; c < cols; ++c) a[dst][c] += f * a[src][c];
        for (size_t c = 0; c < rows; ++c) u[dst][c] += f * u[src][c];
    }
    void add_col(size_t dst, size_t src, const Integer& f) {
        for (size_t r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
        for (size_t r = 0; r < cols; ++r) v[r][dst] += f * v[r][src];
    }
    void negate_row(size_t i) {
        for (size_t c = 0; c < cols; ++c) a[i][c] = -a[i][c];
        for (size_t c = 0; c < rows; ++c) u[i][c] = -u[i][c];
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& M) {
    size_t rows = M.size();
    size_t cols = rows == 0 ? 0 : M[0].size();
    for (const auto& r : M)
        if (r.size() != cols) throw Error(errkind::BadInput, "ragged matrix");

    SnfWork w;
    w.rows = rows;
    w.cols = cols;
    w.a = M;
    w.u = IntMatrix(rows, std::vector<Integer>(rows, 0));
    w.v = IntMatrix(cols, std::vector<Integer>(cols, 0));
    for (size_t i = 0; i < rows; ++i) w.u[i][i] = 1;
    for (size_t i = 0; i < cols; ++i) w.v[i][i] = 1;

    size_t n = std::min(rows, cols);
    for (size_t k = 0; k < n; ++k) {
        // Find a pivot of minimal absolute value in the trailing block.
        while (true) {
            size_t pi = rows, pj = cols;
            Integer best = 0;
            for (size_t i = k; i < rows; ++i)
                for (size_t j = k; j < cols; ++j) {
                    if (w.a[i][j] == 0) continue;
                    Integer v = abs(w.a[i][j]);
                    if (best == 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) break;  // trailing block is zero
            if (pi != k) w.swap_rows(k, pi);
            if (pj != k) w.swap_cols(k, pj);

            bool reduced = true;
            for (size_t i = k + 1; i < rows; ++i) {
                if (w.a[i][k] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.a[i][k].get_mpz_t(), w.a[k][k].get_mpz_t());
                w.add_row(i, k, -q);
                if (w.a[i][k] != 0) reduced = false;
            }
            for (size_t j = k + 1; j < cols; ++j) {
                if (w.a[k][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.a[k][j].get_mpz_t(), w.a[k][k].get_mpz_t());
                w.add_col(j, k, -q);
                if (w.a[k][j] != 0) reduced = false;
            }
            if (!reduced) continue;

            // Row and column are clear; enforce divisibility of the rest.
            bool divides_all = true;
            for (size_t i = k + 1; i < rows && divides_all; ++i)
                for (size_t j = k + 1; j < cols && divides_all; ++j)
                    if (w.a[i][j] % w.a[k][k] != 0) {
                        w.add_row(k, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (w.a[k][k] < 0) w.negate_row(k);
    }
    return {w.u, w.a, w.v};
}

}  // namespace elk3
