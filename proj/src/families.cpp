#include "elk3/families.hpp"

namespace elk3 {

FamilySpec family_xd(int d, UniPoly cubic) {
    if (d < 0 || d > 8)
        throw Error(errkind::InvalidFamilyParameter, "X_d needs 0 <= d <= 8");
    if (cubic.is_zero() || cubic.degree() != 3)
        throw Error(errkind::InvalidFamilyParameter, "X_d needs a cubic P(t)");
    return {FamilySpec::Kind::Xd, d, std::move(cubic)};
}

FamilySpec family_xprime(int n, const Rational& a1, const Rational& a2, const Rational& a3) {
    if (n != 5 && n != 7)
        throw Error(errkind::InvalidFamilyParameter, "X'_n needs n in {5, 7}");
    UniPoly P = UniPoly(std::vector<Rational>{a3, a2, a1, Rational(-(8 - n)), Rational(2)});
    return {FamilySpec::Kind::XPrime, n, std::move(P)};
}

TwoTorsionSurface build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Xd:
            return TwoTorsionSurface(spec.P, UniPoly::monomial(spec.parameter, 1));
        case FamilySpec::Kind::XPrime: {
            int n = spec.parameter;
            UniPoly b = UniPoly::monomial(n, 1);
            UniPoly factor = UniPoly::t() - UniPoly::constant(1);
            b *= factor.pow(static_cast<unsigned>(8 - n));
            return TwoTorsionSurface(spec.P, b);
        }
    }
    throw Error(errkind::InvalidFamilyParameter, "unreachable family kind");
}

}  // namespace elk3
