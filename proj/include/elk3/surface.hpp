#ifndef ELK3_SURFACE_HPP
#define ELK3_SURFACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "elk3/kodaira.hpp"
#include "elk3/places.hpp"
#include "elk3/unipoly.hpp"

namespace elk3 {

// Elliptic K3 surface y^2 = x(x^2 + a(t) x + b(t)) with the 2-torsion
// section (0, 0).  The constructor enforces the degree bounds, a nonzero
// discriminant, and minimality at every place; non-minimal input is
// rejected with the offending place rather than reduced.
class TwoTorsionSurface {
public:
    TwoTorsionSurface(UniPoly a, UniPoly b);

    const UniPoly& a() const { return a_; }
    const UniPoly& b() const { return b_; }
    const UniPoly& c() const { return c_; }  // a^2 - 4b

private:
    UniPoly a_, b_, c_;
};

// The model algebra also stands alone, e.g. for data that fails the K3
// minimality requirements of the class.
std::pair<UniPoly, UniPoly> weierstrass_discriminants(const UniPoly& a, const UniPoly& b);
std::pair<UniPoly, UniPoly> quotient_model(const UniPoly& a, const UniPoly& b);

// (Delta_X, Delta_Y) = (b^2 c, b c^2).  The classical discriminant carries
// an extra constant factor 16, which changes no valuation and is dropped.
std::pair<UniPoly, UniPoly> discriminants(const TwoTorsionSurface& s);

struct SurfacePlace {
    UniPoly modulus;
    bool at_infinity = false;
    int point_count = 0;
    int v_a = 0, v_b = 0, v_c = 0;  // v_a may be kValInfinity
    FiberType fiber;

    int v_delta() const { return 2 * v_b + v_c; }
    std::string place_str() const { return at_infinity ? "inf" : modulus.str(); }
};

// Every place with Delta = 0, plus t = infinity (even when regular there).
std::vector<SurfacePlace> surface_places(const TwoTorsionSurface& s);

// Singular fibers with multiplicities and place labels.
Configuration classify_surface(const TwoTorsionSurface& s);

// y^2 = x(x^2 - 2a x + a^2 - 4b), the quotient by translation.
TwoTorsionSurface quotient_surface(const TwoTorsionSurface& s);

// Symbolic classification of the quotient equals the table-mapped image
// of the classification, place by place.
bool quotient_configuration_crosscheck(const TwoTorsionSurface& s);

struct SpecializedCurve {
    Rational a0, b0;
};

SpecializedCurve make_curve(const Rational& a0, const Rational& b0);
SpecializedCurve specialize(const TwoTorsionSurface& s, const Rational& t0);
SpecializedCurve quotient_curve(const SpecializedCurve& c);

struct AffinePoint {
    bool infinity = true;
    Rational x, y;

    static AffinePoint at_infinity() { return {}; }
    static AffinePoint affine(const Rational& x, const Rational& y) { return {false, x, y}; }

    bool operator==(const AffinePoint& o) const {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
    }
};

bool on_curve(const SpecializedCurve& c, const AffinePoint& P);

// Chord-tangent addition on y^2 = x(x^2 + a0 x + b0).
AffinePoint group_law(const SpecializedCurve& c, const AffinePoint& P, const AffinePoint& Q);

// Degree-2 isogeny with kernel {O, (0,0)}, onto quotient_curve(c).
AffinePoint apply_isogeny(const SpecializedCurve& c, const AffinePoint& P);

// Dual isogeny; cY is the quotient curve, the image lies on the curve it
// covers.  apply_dual(quotient_curve(c), apply_isogeny(c, P)) doubles P.
AffinePoint apply_dual(const SpecializedCurve& cY, const AffinePoint& Q);

// Copies of Z/2 in the 2-torsion of the Mordell-Weil group over C(t):
// 2 iff c = a^2 - 4b is a square in C[t].
int two_torsion_rank(const TwoTorsionSurface& s);

// Whether (0,0) is divisible by 2 in the Mordell-Weil group over C(t)
// (2-descent: b = s0^2 with a + 2 s0 or a - 2 s0 a square in C[t]).
bool has_order_four_over_sigma(const TwoTorsionSurface& s);

// rho = 2 + mw_rank + sum (m_nu - 1).
int shioda_tate(const Configuration& cfg, int mw_rank);

// Signed determinant of the Neron-Severi lattice: |det| = prod m1 / tor^2,
// sign (-1)^(rank_ns - 1) from the signature (1, rank_ns - 1).
Integer det_ns(const Configuration& cfg, const Integer& torsion_order, int rank_ns);

struct TorsionInfo {
    int rank2 = 1;        // copies of Z/2 in the 2-torsion
    bool order4 = false;  // some section halves (0,0)
    Integer order() const { return Integer(1 << rank2) * (order4 ? 2 : 1); }
    std::string group_str() const;
};

TorsionInfo compute_torsion(const TwoTorsionSurface& s);

}  // namespace elk3

#endif
