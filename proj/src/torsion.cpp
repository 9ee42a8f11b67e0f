#include "elk3/surface.hpp"

namespace elk3 {

namespace {

// Element p + q*sqrt(u) of Q(sqrt(u)) for a fixed non-square rational u.
// Only used for the 2-descent test below, where the square root of the
// leading coefficient of b need not be rational.
struct QuadRat {
    Rational p, q;

    bool is_zero() const { return p == 0 && q == 0; }
};

struct QuadField {
    Rational u;

    QuadRat add(const QuadRat& x, const QuadRat& y) const { return {x.p + y.p, x.q + y.q}; }
    QuadRat sub(const QuadRat& x, const QuadRat& y) const { return {x.p - y.p, x.q - y.q}; }
    QuadRat mul(const QuadRat& x, const QuadRat& y) const {
        return {x.p * y.p + x.q * y.q * u, x.p * y.q + x.q * y.p};
    }
    QuadRat inv(const QuadRat& x) const {
        Rational n = x.p * x.p - x.q * x.q * u;  // nonzero: u is not a rational square
        return {x.p / n, -x.q / n};
    }
    QuadRat div(const QuadRat& x, const QuadRat& y) const { return mul(x, inv(y)); }
    QuadRat scale(const QuadRat& x, long s) const {
        return {x.p * Rational(s), x.q * Rational(s)};
    }
};

using QuadPoly = std::vector<QuadRat>;  // ascending degree, trimmed

void qp_trim(QuadPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int qp_deg(const QuadPoly& f) { return static_cast<int>(f.size()) - 1; }

QuadPoly qp_derivative(const QuadField& F, const QuadPoly& f) {
    QuadPoly out;
    for (size_t i = 1; i < f.size(); ++i) out.push_back(F.scale(f[i], static_cast<long>(i)));
    qp_trim(out);
    return out;
}

QuadPoly qp_sub(const QuadField& F, QuadPoly f, const QuadPoly& g) {
    if (f.size() < g.size()) f.resize(g.size(), QuadRat{});
    for (size_t i = 0; i < g.size(); ++i) f[i] = F.sub(f[i], g[i]);
    qp_trim(f);
    return f;
}

// Remainder and exact quotient of f by monic-normalizable g.
std::pair<QuadPoly, QuadPoly> qp_divrem(const QuadField& F, QuadPoly f, const QuadPoly& g) {
    int dg = qp_deg(g);
    QuadPoly q;
    if (qp_deg(f) >= dg) q.assign(f.size() - g.size() + 1, QuadRat{});
    while (qp_deg(f) >= dg) {
        QuadRat c = F.div(f.back(), g.back());
        int shift = qp_deg(f) - dg;
        q[static_cast<size_t>(shift)] = c;
        for (int j = 0; j <= dg; ++j) {
            size_t idx = static_cast<size_t>(shift + j);
            f[idx] = F.sub(f[idx], F.mul(c, g[static_cast<size_t>(j)]));
        }
        qp_trim(f);
    }
    qp_trim(q);
    return {q, f};
}

QuadPoly qp_monic(const QuadField& F, QuadPoly f) {
    QuadRat inv_lc = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, inv_lc);
    return f;
}

QuadPoly qp_gcd(const QuadField& F, QuadPoly a, QuadPoly b) {
    while (!b.empty()) {
        QuadPoly r = qp_divrem(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = qp_monic(F, a);
    return a;
}

// All root multiplicities even (Yun over Q(sqrt(u))).
bool qp_is_geometric_square(const QuadField& F, const QuadPoly& f) {
    if (qp_deg(f) < 0) return false;
    if (qp_deg(f) % 2 != 0) return false;
    QuadPoly fp = qp_derivative(F, f);
    QuadPoly c = qp_gcd(F, f, fp);
    if (c.empty() || qp_deg(c) == 0) return qp_deg(f) == 0;
    QuadPoly w = qp_divrem(F, f, c).first;
    QuadPoly y = qp_divrem(F, fp, c).first;
    int k = 1;
    while (qp_deg(w) > 0) {
        QuadPoly z = qp_sub(F, y, qp_derivative(F, w));
        QuadPoly g = qp_gcd(F, w, z);
        if (qp_deg(g) > 0 && k % 2 != 0) return false;
        w = qp_divrem(F, w, g).first;
        y = qp_divrem(F, z, g).first;
        ++k;
    }
    return true;
}

QuadPoly qp_from(const UniPoly& rational_part, const UniPoly& root_part) {
    size_t n = 0;
    if (!rational_part.is_zero()) n = static_cast<size_t>(rational_part.degree()) + 1;
    if (!root_part.is_zero()) n = std::max(n, static_cast<size_t>(root_part.degree()) + 1);
    QuadPoly out(n);
    for (size_t i = 0; i < n; ++i)
        out[i] = {rational_part.coeff(static_cast<int>(i)), root_part.coeff(static_cast<int>(i))};
    qp_trim(out);
    return out;
}

}  // namespace

int two_torsion_rank(const TwoTorsionSurface& s) {
    return is_square_geometric(s.c()) ? 2 : 1;
}

bool has_order_four_over_sigma(const TwoTorsionSurface& s) {
    if (!is_square_geometric(s.b())) return false;

    // b = u * g^2 with g monic, u = lc(b); a candidate half of (0,0) needs
    // a + 2 s0 or a - 2 s0 to be a square in C[t], s0 = sqrt(u) g.
    UniPoly g = UniPoly::constant(1);
    for (const auto& part : squarefree_decompose(s.b()))
        g *= part.factor.pow(static_cast<unsigned>(part.multiplicity / 2));
    Rational u = s.b().lc();

    if (auto r = rational_sqrt_exact(u)) {
        UniPoly s0 = (*r) * g;
        UniPoly plus = s.a() + Rational(2) * s0;
        UniPoly minus = s.a() - Rational(2) * s0;
        // Neither branch is the zero polynomial: their product is c != 0.
        return is_square_geometric(plus) || is_square_geometric(minus);
    }

    // Conjugation swaps the two branches, so squaredness over C[t] agrees;
    // test one of them over Q(sqrt(u)).
    QuadField F{u};
    QuadPoly branch = qp_from(s.a(), Rational(2) * g);
    return qp_is_geometric_square(F, branch);
}

}  // namespace elk3
