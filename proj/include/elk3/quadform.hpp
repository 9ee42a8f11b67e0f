#ifndef ELK3_QUADFORM_HPP
#define ELK3_QUADFORM_HPP

#include <vector>

#include "elk3/lattice.hpp"

namespace elk3 {

// Finite abelian group (Z/d_1) x ... x (Z/d_k) with d_1 | d_2 | ... carrying
// a Q/2Z-valued quadratic form.  gen_gram holds q(g_i) on the diagonal
// (reduced into [0,2)) and the bilinear values b(g_i, g_j) off the diagonal
// (reduced into [0,1)).
struct FiniteQuadForm {
    std::vector<Integer> factors;
    RatMatrix gen_gram;
    std::vector<RatVector> generator_lifts;  // ambient coords, when lattice-derived

    size_t ngens() const { return factors.size(); }
    Integer order() const;

    // Value on an element written as integer multiples of the generators.
    Rational q(const std::vector<Integer>& x) const;
    Rational b(const std::vector<Integer>& x, const std::vector<Integer>& y) const;
    Integer element_order(const std::vector<Integer>& x) const;

    // Every element as a coordinate tuple, 0 <= x_i < d_i.
    std::vector<std::vector<Integer>> elements() const;
};

// Validates the well-definedness conditions d_i^2 q_ii in 2Z, d_i b_ij in Z.
FiniteQuadForm make_quadform(std::vector<Integer> factors, RatMatrix gen_gram,
                             std::vector<RatVector> lifts = {});

// Discriminant group L*/L with its quadratic form, via the Smith normal
// form of the Gram matrix; generator lifts are rational vectors in the
// basis of L.
FiniteQuadForm discriminant_form(const IntLattice& L);

// True iff a product of cyclic groups of the given orders contains an
// element of order q (q a prime power), i.e. some order is divisible by q.
bool has_element_of_order(const std::vector<Integer>& cyclic_orders, const Integer& q);

// All forms h^perp / <h> over order-2 isotropic h, deduplicated up to
// isomorphism of finite quadratic forms.
std::vector<FiniteQuadForm> isotropic_reductions(const FiniteQuadForm& F);

// Brute-force isomorphism test; intended for group order <= 2^10.
bool quadform_isomorphic(const FiniteQuadForm& A, const FiniteQuadForm& B);

// Multiset of (element order, q value); equal for isomorphic forms.
std::vector<std::pair<Integer, Rational>> quadform_fingerprint(const FiniteQuadForm& F);

}  // namespace elk3

#endif
