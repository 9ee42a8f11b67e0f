#ifndef ELK3_PLACES_HPP
#define ELK3_PLACES_HPP

#include <limits>
#include <string>
#include <vector>

#include "elk3/unipoly.hpp"

namespace elk3 {

// Valuation of the zero polynomial.  Kept out of all arithmetic; only
// compared against.
inline constexpr int kValInfinity = std::numeric_limits<int>::max();

// A Galois-stable packet of points of P^1: a monic squarefree modulus (or
// t = infinity) whose roots all share the same valuation in each tracked
// polynomial.
struct PlaceCluster {
    UniPoly modulus;             // monic squarefree; unused when at_infinity
    bool at_infinity = false;
    int point_count = 0;         // deg(modulus), or 1 at infinity
    std::vector<int> valuations; // positional, one per tracked polynomial

    std::string place_str() const { return at_infinity ? "inf" : modulus.str(); }
};

// Splits monic(support) into pairwise coprime squarefree moduli such that
// every root of a modulus has the same valuation in every tracked
// polynomial.  Needs no factorization over Q: a modulus is split along
// gcds until the valuation is uniform.
std::vector<PlaceCluster> coprime_refine(const UniPoly& support,
                                         const std::vector<UniPoly>& tracked);

// The place t = infinity of the Weierstrass data (a, b), deg a <= 4,
// deg b <= 8, via the weight-(4, 8) homogenization a~(s) = s^4 a(1/s),
// b~(s) = s^8 b(1/s).  Valuations are {v_a, v_b, v_c} with c = a^2 - 4b.
PlaceCluster infinity_valuations(const UniPoly& a, const UniPoly& b);

}  // namespace elk3

#endif
