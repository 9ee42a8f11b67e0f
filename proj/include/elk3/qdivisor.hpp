#ifndef ELK3_QDIVISOR_HPP
#define ELK3_QDIVISOR_HPP

#include "elk3/lattice.hpp"

namespace elk3 {

// Rational vector in the basis of an ambient lattice.  Membership in L,
// L* and the order mod L are computed, never assumed.
struct QDivisor {
    IntLattice lattice;
    RatVector coords;
};

QDivisor make_qdivisor(IntLattice L, RatVector coords);

Rational qdiv_inner(const QDivisor& u, const QDivisor& v);  // LatticeMismatch on mixed ambients
Integer qdiv_order_mod_lattice(const QDivisor& v);          // least m >= 1 with m*v integral
bool qdiv_in_dual(const QDivisor& v);                       // pairs integrally with the basis

// theta_{2m} = (1/2m) sum k*Theta_k on the A_{2m-1} chain of an I_{2m}
// fiber of type (ii).
QDivisor theta_divisor(int m);

// Order-2d class for the X_d families: theta_{2d} on the A_{2d-1} block
// plus half the sum of the two far simple components of the I*_{12-2d}
// fiber, inside A(2d-1) + D(16-2d).
QDivisor gamma_xd(int d);

// Order-2n(8-n) class for the X'_n families: theta_{2n} + theta_{16-2n}
// plus half the far component of the I_2 fiber at infinity, inside
// A(2n-1) + A(15-2n) + A(1).
QDivisor gamma_xprime(int n);

}  // namespace elk3

#endif
