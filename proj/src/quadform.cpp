#include "elk3/quadform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "elk3/error.hpp"

namespace elk3 {

Integer FiniteQuadForm::order() const {
    Integer o = 1;
    for (const auto& d : factors) o *= d;
    return o;
}

Rational FiniteQuadForm::q(const std::vector<Integer>& x) const {
    Rational acc(0);
    size_t k = ngens();
    for (size_t i = 0; i < k; ++i) {
        acc += Rational(x[i] * x[i]) * gen_gram[i][i];
        for (size_t j = i + 1; j < k; ++j) acc += 2 * Rational(x[i] * x[j]) * gen_gram[i][j];
    }
    return mod_two(acc);
}

Rational FiniteQuadForm::b(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
    Rational acc(0);
    size_t k = ngens();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) acc += Rational(x[i] * y[j]) * gen_gram[i][j];
    return mod_one(acc);
}

Integer FiniteQuadForm::element_order(const std::vector<Integer>& x) const {
    Integer o = 1;
    for (size_t i = 0; i < ngens(); ++i) {
        if (x[i] % factors[i] == 0) continue;
        Integer g = gcd(Integer(x[i] % factors[i]), factors[i]);
        Integer oi = factors[i] / g;
        o = lcm(o, oi);
    }
    return o;
}

std::vector<std::vector<Integer>> FiniteQuadForm::elements() const {
    Integer total = order();
    if (total > 1 << 20)
        throw Error(errkind::InvalidParameter, "group too large to enumerate");
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> cur(ngens(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == ngens()) {
            out.push_back(cur);
            return;
        }
        for (Integer v = 0; v < factors[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

FiniteQuadForm make_quadform(std::vector<Integer> factors, RatMatrix gen_gram,
                             std::vector<RatVector> lifts) {
    size_t k = factors.size();
    if (gen_gram.size() != k) throw Error(errkind::BadInput, "gen_gram size mismatch");
    for (auto& row : gen_gram)
        if (row.size() != k) throw Error(errkind::BadInput, "gen_gram not square");
    for (size_t i = 0; i < k; ++i) {
        if (factors[i] <= 1) throw Error(errkind::BadInput, "invariant factors must exceed 1");
        if (i + 1 < k && factors[i + 1] % factors[i] != 0)
            throw Error(errkind::BadInput, "invariant factors must form a divisibility chain");
    }
    FiniteQuadForm F;
    F.factors = std::move(factors);
    F.gen_gram.assign(k, RatVector(k, Rational(0)));
    for (size_t i = 0; i < k; ++i) {
        F.gen_gram[i][i] = mod_two(gen_gram[i][i]);
        for (size_t j = 0; j < k; ++j)
            if (j != i) F.gen_gram[i][j] = mod_one(gen_gram[i][j]);
    }
    for (size_t i = 0; i < k; ++i) {
        if (!is_integer(Rational(F.factors[i] * F.factors[i]) * F.gen_gram[i][i] / 2))
            throw Error(errkind::BadInput, "q not well-defined on Z/d_i");
        for (size_t j = 0; j < k; ++j)
            if (j != i && !is_integer(Rational(F.factors[i]) * F.gen_gram[i][j]))
                throw Error(errkind::BadInput, "b not well-defined on Z/d_i");
    }
    F.generator_lifts = std::move(lifts);
    return F;
}

FiniteQuadForm discriminant_form(const IntLattice& L) {
    int n = L.rank();
    if (n == 0) return make_quadform({}, {});
    Integer det = lattice_det(L);
    if (det == 0) throw Error(errkind::DegenerateLattice, "discriminant form needs det != 0");

    SnfResult snf = smith_normal_form(L.gram);
    RatMatrix gram_inv = rat_inverse(L.gram);
    RatMatrix u_inv_rat = rat_inverse(snf.U);

    // Generator of the i-th cyclic factor lifts to M^{-1} U^{-1} e_i.
    std::vector<Integer> factors;
    std::vector<RatVector> lifts;
    for (int i = 0; i < n; ++i) {
        Integer d = snf.D[i][i];
        if (d == 1) continue;
        RatVector v(n, Rational(0));
        for (int r = 0; r < n; ++r) {
            Rational acc(0);
            for (int s = 0; s < n; ++s) acc += gram_inv[r][s] * u_inv_rat[s][i];
            v[r] = acc;
        }
        factors.push_back(d);
        lifts.push_back(std::move(v));
    }

    size_t k = factors.size();
    RatMatrix gg(k, RatVector(k, Rational(0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            Rational acc(0);
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s)
                    acc += lifts[i][r] * Rational(L.gram[r][s]) * lifts[j][s];
            gg[i][j] = acc;
        }

    FiniteQuadForm F = make_quadform(std::move(factors), std::move(gg), std::move(lifts));
    if (F.order() != abs(det))
        throw Error(errkind::DegenerateLattice, "discriminant group order != |det|");
    return F;
}

bool has_element_of_order(const std::vector<Integer>& cyclic_orders, const Integer& q) {
    if (q <= 1) return q == 1;
    for (const auto& d : cyclic_orders)
        if (d % q == 0) return true;
    return false;
}

std::vector<std::pair<Integer, Rational>> quadform_fingerprint(const FiniteQuadForm& F) {
    std::vector<std::pair<Integer, Rational>> fp;
    for (const auto& x : F.elements()) fp.emplace_back(F.element_order(x), F.q(x));
    std::sort(fp.begin(), fp.end());
    return fp;
}

namespace {

// Subgroup generated by the given elements, as a set of coordinate tuples.
std::set<std::vector<Integer>> subgroup_closure(const FiniteQuadForm& F,
                                                const std::vector<std::vector<Integer>>& gens) {
    auto normalize = [&](std::vector<Integer> x) {
        for (size_t i = 0; i < F.ngens(); ++i) {
            mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), F.factors[i].get_mpz_t());
        }
        return x;
    };
    std::set<std::vector<Integer>> seen;
    std::vector<std::vector<Integer>> frontier;
    std::vector<Integer> zero(F.ngens(), 0);
    seen.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        std::vector<std::vector<Integer>> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                std::vector<Integer> y(F.ngens());
                for (size_t i = 0; i < F.ngens(); ++i) y[i] = x[i] + g[i];
                y = normalize(std::move(y));
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

bool quadform_isomorphic(const FiniteQuadForm& A, const FiniteQuadForm& B) {
    if (A.factors != B.factors) return false;
    if (A.ngens() == 0) return true;

    auto elems = B.elements();
    size_t k = A.ngens();
    std::vector<std::vector<Integer>> image(k);

    // Candidate images of generator i: matching q-value and order dividing d_i.
    std::vector<std::vector<std::vector<Integer>>> candidates(k);
    for (size_t i = 0; i < k; ++i) {
        std::vector<Integer> gi(k, 0);
        gi[i] = 1;
        Rational qi = A.q(gi);
        for (const auto& y : elems) {
            if (B.q(y) != qi) continue;
            if (A.factors[i] % B.element_order(y) != 0) continue;
            candidates[i].push_back(y);
        }
        if (candidates[i].empty()) return false;
    }

    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == k) {
            auto sub = subgroup_closure(B, image);
            return Integer(static_cast<long>(sub.size())) == B.order();
        }
        std::vector<Integer> gi(k, 0);
        gi[i] = 1;
        for (const auto& y : candidates[i]) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) {
                std::vector<Integer> gj(k, 0);
                gj[j] = 1;
                if (A.b(gi, gj) != B.b(y, image[j])) ok = false;
            }
            if (!ok) continue;
            image[i] = y;
            if (place(i + 1)) return true;
        }
        return false;
    };
    return place(0);
}

std::vector<FiniteQuadForm> isotropic_reductions(const FiniteQuadForm& F) {
    size_t k = F.ngens();
    std::vector<FiniteQuadForm> out;
    if (k == 0) return out;

    std::vector<std::vector<Integer>> elems = F.elements();
    std::vector<std::pair<std::vector<std::pair<Integer, Rational>>, FiniteQuadForm>> kept;

    for (const auto& h : elems) {
        if (F.element_order(h) != 2) continue;
        if (F.q(h) != 0) continue;

        // beta_i = b(g_i, h) lies in {0, 1/2} because 2h = 0.
        std::vector<bool> half(k, false);
        bool any_half = false;
        for (size_t i = 0; i < k; ++i) {
            std::vector<Integer> gi(k, 0);
            gi[i] = 1;
            Rational beta = F.b(gi, h);
            if (beta == Rational(1, 2)) {
                half[i] = true;
                any_half = true;
            } else if (beta != 0) {
                throw Error(errkind::BadInput, "order-2 element with b not in {0, 1/2}");
            }
        }

        // Basis of S = { c : b(c, h) integral } as columns of an integer matrix.
        IntMatrix basis(k, std::vector<Integer>(k, 0));
        if (!any_half) {
            for (size_t i = 0; i < k; ++i) basis[i][i] = 1;
        } else {
            size_t p = 0;
            while (!half[p]) ++p;
            size_t col = 0;
            for (size_t i = 0; i < k; ++i) {
                if (i == p) continue;
                basis[i][col] = 1;
                if (half[i]) basis[p][col] = 1;
                ++col;
            }
            basis[p][col] = 2;
        }

        // Relations of S/(D Z^k + Z h) in basis coordinates.
        RatMatrix binv = rat_inverse(basis);
        auto to_basis_coords = [&](const std::vector<Integer>& vec) {
            std::vector<Integer> out_c(k);
            for (size_t r = 0; r < k; ++r) {
                Rational acc(0);
                for (size_t s = 0; s < k; ++s) acc += binv[r][s] * Rational(vec[s]);
                if (!is_integer(acc))
                    throw Error(errkind::BadInput, "relation lies outside the subgroup");
                out_c[r] = acc.get_num();
            }
            return out_c;
        };

        IntMatrix rel(k, std::vector<Integer>(k + 1, 0));
        for (size_t j = 0; j < k; ++j) {
            std::vector<Integer> dv(k, 0);
            dv[j] = F.factors[j];
            auto col = to_basis_coords(dv);
            for (size_t r = 0; r < k; ++r) rel[r][j] = col[r];
        }
        {
            auto col = to_basis_coords(h);
            for (size_t r = 0; r < k; ++r) rel[r][k] = col[r];
        }

        SnfResult snf = smith_normal_form(rel);
        RatMatrix u_inv = rat_inverse(snf.U);

        // New generators, as elements of the original group.
        std::vector<Integer> new_factors;
        std::vector<std::vector<Integer>> new_gens;
        for (size_t i = 0; i < k; ++i) {
            Integer d = snf.D[i][i];
            if (d <= 1) continue;
            std::vector<Integer> g(k, 0);
            for (size_t r = 0; r < k; ++r) {
                Rational acc(0);
                for (size_t s = 0; s < k; ++s)
                    acc += Rational(basis[r][s]) * u_inv[s][i];
                if (!is_integer(acc)) throw Error(errkind::BadInput, "non-integral generator lift");
                g[r] = acc.get_num();
            }
            new_factors.push_back(d);
            new_gens.push_back(std::move(g));
        }

        size_t kk = new_factors.size();
        RatMatrix gg(kk, RatVector(kk, Rational(0)));
        for (size_t i = 0; i < kk; ++i)
            for (size_t j = 0; j < kk; ++j) {
                if (i == j)
                    gg[i][j] = F.q(new_gens[i]);
                else
                    gg[i][j] = F.b(new_gens[i], new_gens[j]);
            }
        FiniteQuadForm red = make_quadform(std::move(new_factors), std::move(gg));

        auto fp = quadform_fingerprint(red);
        bool dup = false;
        for (const auto& [kfp, kf] : kept) {
            if (kfp == fp && quadform_isomorphic(kf, red)) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.emplace_back(std::move(fp), std::move(red));
    }

    for (auto& [fp, f] : kept) out.push_back(std::move(f));
    return out;
}

}  // namespace elk3
