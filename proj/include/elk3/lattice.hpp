#ifndef ELK3_LATTICE_HPP
#define ELK3_LATTICE_HPP

#include <string>
#include <vector>

#include "elk3/rational.hpp"

namespace elk3 {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

// Nondegenerate even lattice given by a symmetric integer Gram matrix.
struct IntLattice {
    IntMatrix gram;
    std::vector<std::string> basis_labels;

    int rank() const { return static_cast<int>(gram.size()); }
};

// Constructor with symmetry/evenness/nondegeneracy checks.
IntLattice make_lattice(IntMatrix gram, std::vector<std::string> labels = {});

// Root lattices in the negative definite convention (diagonal -2), to
// match fiber components; U and <k> keep their usual signs.
IntLattice lattice_A(int n);
IntLattice lattice_D(int n);
IntLattice lattice_E7();
IntLattice lattice_E8();
IntLattice lattice_U();
IntLattice lattice_rank1(const Integer& k);  // <k>, k even and nonzero
IntLattice lattice_Md(int d);                // U + U + <-2d>
IntLattice lattice_nikulin();                // <e1..e8, (e1+...+e8)/2>, e_i^2 = -2

IntLattice rescale(const IntLattice& L, const Integer& k);
IntLattice direct_sum(const IntLattice& a, const IntLattice& b);

Integer lattice_det(const IntLattice& L);

// U * M * V = D diagonal with d_1 | d_2 | ..., U and V unimodular.
struct SnfResult {
    IntMatrix U, D, V;
};
SnfResult smith_normal_form(const IntMatrix& M);

Integer int_det(const IntMatrix& M);
RatMatrix rat_inverse(const IntMatrix& M);  // throws DegenerateLattice if singular

}  // namespace elk3

#endif
