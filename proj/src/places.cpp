#include "elk3/places.hpp"

#include <algorithm>
#include <utility>

namespace elk3 {

namespace {

// Splits a monic squarefree h into (sub-modulus, valuation-of-f) pieces.
// Roots of h/gcd(h,f) have valuation 0; the rest recurse on f/gcd after
// shifting by one.
void split_by_valuation(const UniPoly& h, const UniPoly& f, int shift,
                        std::vector<std::pair<UniPoly, int>>& out) {
    if (f.is_zero()) {
        out.emplace_back(h, kValInfinity);
        return;
    }
    UniPoly g = poly_gcd(h, f);
    if (g.degree() == 0) {
        out.emplace_back(h, shift);
        return;
    }
    UniPoly h0 = exact_div(h, g);
    if (h0.degree() > 0) out.emplace_back(h0.monic(), shift);
    split_by_valuation(g, exact_div(f, g), shift + 1, out);
}

bool modulus_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        Rational ca = a.coeff(k), cb = b.coeff(k);
        if (ca != cb) return ca < cb;
    }
    return false;
}

}  // namespace

std::vector<PlaceCluster> coprime_refine(const UniPoly& support,
                                         const std::vector<UniPoly>& tracked) {
    if (support.is_zero())
        throw Error(errkind::ZeroPolynomial, "coprime_refine needs a nonzero support");
    if (!is_squarefree(support))
        throw Error(errkind::BadInput, "coprime_refine needs a squarefree support");

    std::vector<PlaceCluster> clusters;
    if (support.degree() >= 1) {
        PlaceCluster whole;
        whole.modulus = support.monic();
        whole.point_count = support.degree();
        clusters.push_back(std::move(whole));
    }

    for (const UniPoly& f : tracked) {
        std::vector<PlaceCluster> next;
        for (const auto& cl : clusters) {
            std::vector<std::pair<UniPoly, int>> pieces;
            split_by_valuation(cl.modulus, f, 0, pieces);
            for (auto& [m, v] : pieces) {
                PlaceCluster piece;
                piece.modulus = std::move(m);
                piece.point_count = piece.modulus.degree();
                piece.valuations = cl.valuations;
                piece.valuations.push_back(v);
                next.push_back(std::move(piece));
            }
        }
        clusters = std::move(next);
    }

    std::sort(clusters.begin(), clusters.end(),
              [](const PlaceCluster& x, const PlaceCluster& y) {
                  return modulus_less(x.modulus, y.modulus);
              });
    return clusters;
}

PlaceCluster infinity_valuations(const UniPoly& a, const UniPoly& b) {
    if (!a.is_zero() && a.degree() > 4)
        throw Error(errkind::DegreeBoundViolated, "deg a > 4");
    if (b.is_zero())
        throw Error(errkind::ZeroPolynomial, "b must be nonzero");
    if (b.degree() > 8)
        throw Error(errkind::DegreeBoundViolated, "deg b > 8");

    UniPoly s = UniPoly::t();
    UniPoly a_tilde = a.is_zero() ? UniPoly::zero() : a.reverse_weighted(4);
    UniPoly b_tilde = b.reverse_weighted(8);
    UniPoly c_tilde = a_tilde * a_tilde - Rational(4) * b_tilde;

    PlaceCluster inf;
    inf.at_infinity = true;
    inf.point_count = 1;
    int v_a = a.is_zero() ? kValInfinity : valuation_at(a_tilde, s);
    int v_b = valuation_at(b_tilde, s);
    int v_c = c_tilde.is_zero() ? kValInfinity : valuation_at(c_tilde, s);
    inf.valuations = {v_a, v_b, v_c};
    return inf;
}

}  // namespace elk3
