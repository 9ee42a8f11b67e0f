#ifndef ELK3_FAMILIES_HPP
#define ELK3_FAMILIES_HPP

#include "elk3/surface.hpp"

namespace elk3 {

// The two explicit families:
//   X_d:  y^2 = x(x^2 + P(t) x + t^d),                     P cubic, 0 <= d <= 8
//   X'_n: y^2 = x(x^2 + P(t) x + t^n(t-1)^{8-n}),          n in {5, 7},
//         P = 2t^4 - (8-n)t^3 + a1 t^2 + a2 t + a3
struct FamilySpec {
    enum class Kind { Xd, XPrime } kind = Kind::Xd;
    int parameter = 1;  // d, resp. n
    UniPoly P;          // the full coefficient polynomial
};

FamilySpec family_xd(int d, UniPoly cubic);
FamilySpec family_xprime(int n, const Rational& a1, const Rational& a2, const Rational& a3);

TwoTorsionSurface build_family(const FamilySpec& spec);

}  // namespace elk3

#endif
