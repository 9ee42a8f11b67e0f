#include "elk3/surface.hpp"

#include <algorithm>
#include <map>

namespace elk3 {

namespace {

// Product of the squarefree parts of f with multiplicity >= threshold.
UniPoly radical_with_multiplicity(const UniPoly& f, int threshold) {
    UniPoly out = UniPoly::constant(1);
    for (const auto& part : squarefree_decompose(f))
        if (part.multiplicity >= threshold) out *= part.factor;
    return out;
}

}  // namespace

TwoTorsionSurface::TwoTorsionSurface(UniPoly a, UniPoly b) : a_(std::move(a)), b_(std::move(b)) {
    if (!a_.is_zero() && a_.degree() > 4)
        throw Error(errkind::DegreeBoundViolated, "deg a > 4");
    if (b_.is_zero())
        throw Error(errkind::SingularSurface, "b = 0 makes Delta vanish identically");
    if (b_.degree() > 8) throw Error(errkind::DegreeBoundViolated, "deg b > 8");
    c_ = a_ * a_ - Rational(4) * b_;
    if (c_.is_zero())
        throw Error(errkind::SingularSurface, "a^2 = 4b makes Delta vanish identically");

    // Minimality at finite places: v_a >= 2 and v_b >= 4 nowhere.
    UniPoly b4 = radical_with_multiplicity(b_, 4);
    if (b4.degree() > 0) {
        if (a_.is_zero())
            throw Error(errkind::NonMinimalModel, "weight-(2,4) rescaling applies", b4.str());
        UniPoly a2 = radical_with_multiplicity(a_, 2);
        UniPoly common = poly_gcd(b4, a2);
        if (common.degree() > 0)
            throw Error(errkind::NonMinimalModel, "weight-(2,4) rescaling applies", common.str());
    }
    // At t = infinity.
    PlaceCluster inf = infinity_valuations(a_, b_);
    if ((inf.valuations[0] == kValInfinity || inf.valuations[0] >= 2) && inf.valuations[1] >= 4)
        throw Error(errkind::NonMinimalModel, "weight-(2,4) rescaling applies", "inf");
}

std::pair<UniPoly, UniPoly> weierstrass_discriminants(const UniPoly& a, const UniPoly& b) {
    UniPoly c = a * a - Rational(4) * b;
    if (b.is_zero() || c.is_zero())
        throw Error(errkind::SingularSurface, "b^2 (a^2 - 4b) vanishes identically");
    return {b * b * c, b * c * c};
}

std::pair<UniPoly, UniPoly> quotient_model(const UniPoly& a, const UniPoly& b) {
    return {Rational(-2) * a, a * a - Rational(4) * b};
}

std::pair<UniPoly, UniPoly> discriminants(const TwoTorsionSurface& s) {
    const UniPoly& b = s.b();
    const UniPoly& c = s.c();
    return {b * b * c, b * c * c};
}

std::vector<SurfacePlace> surface_places(const TwoTorsionSurface& s) {
    std::vector<SurfacePlace> out;
    UniPoly support = radical(s.b() * s.c());
    if (support.degree() >= 1) {
        auto clusters = coprime_refine(support, {s.a(), s.b(), s.c()});
        for (const auto& cl : clusters) {
            SurfacePlace p;
            p.modulus = cl.modulus;
            p.point_count = cl.point_count;
            p.v_a = cl.valuations[0];
            p.v_b = cl.valuations[1];
            p.v_c = cl.valuations[2];
            try {
                p.fiber = classify_from_valuations(p.v_a, p.v_b, p.v_c);
            } catch (const Error& e) {
                throw Error(e.kind(), e.what(), p.place_str());
            }
            out.push_back(std::move(p));
        }
    }
    PlaceCluster inf = infinity_valuations(s.a(), s.b());
    SurfacePlace p;
    p.at_infinity = true;
    p.point_count = 1;
    p.v_a = inf.valuations[0];
    p.v_b = inf.valuations[1];
    p.v_c = inf.valuations[2];
    try {
        p.fiber = classify_from_valuations(p.v_a, p.v_b, p.v_c);
    } catch (const Error& e) {
        throw Error(e.kind(), e.what(), "inf");
    }
    out.push_back(std::move(p));
    return out;
}

Configuration classify_surface(const TwoTorsionSurface& s) {
    Configuration cfg;
    for (const auto& p : surface_places(s)) {
        if (p.fiber.kind == FiberKind::Regular) continue;
        cfg.add(p.fiber, p.point_count, p.place_str());
    }
    cfg.canonicalize();
    return cfg;
}

TwoTorsionSurface quotient_surface(const TwoTorsionSurface& s) {
    auto [ay, by] = quotient_model(s.a(), s.b());
    return TwoTorsionSurface(std::move(ay), std::move(by));
}

bool quotient_configuration_crosscheck(const TwoTorsionSurface& s) {
    TwoTorsionSurface y = quotient_surface(s);
    auto xs = surface_places(s);
    auto ys = surface_places(y);
    if (xs.size() != ys.size()) return false;
    // Both supports are rad(b c); canonical sorting aligns the clusters.
    for (size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].at_infinity != ys[i].at_infinity) return false;
        if (!xs[i].at_infinity && xs[i].modulus != ys[i].modulus) return false;
        if (quotient_fiber(xs[i].fiber) != ys[i].fiber) return false;
    }
    return true;
}

SpecializedCurve make_curve(const Rational& a0, const Rational& b0) {
    if (b0 == 0 || a0 * a0 - 4 * b0 == 0)
        throw Error(errkind::SingularFiber, "b0 (a0^2 - 4 b0) = 0");
    return {a0, b0};
}

SpecializedCurve specialize(const TwoTorsionSurface& s, const Rational& t0) {
    Rational a0 = s.a().eval(t0), b0 = s.b().eval(t0);
    if (b0 == 0 || a0 * a0 - 4 * b0 == 0)
        throw Error(errkind::SingularFiber, "Delta vanishes at t0 = " + rational_str(t0));
    return {a0, b0};
}

SpecializedCurve quotient_curve(const SpecializedCurve& c) {
    return make_curve(-2 * c.a0, c.a0 * c.a0 - 4 * c.b0);
}

bool on_curve(const SpecializedCurve& c, const AffinePoint& P) {
    if (P.infinity) return true;
    return P.y * P.y == P.x * (P.x * P.x + c.a0 * P.x + c.b0);
}

AffinePoint group_law(const SpecializedCurve& c, const AffinePoint& P, const AffinePoint& Q) {
    if (!on_curve(c, P) || !on_curve(c, Q))
        throw Error(errkind::OffCurve, "group law input not on the curve");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (P.x == Q.x && P.y == -Q.y) return AffinePoint::at_infinity();
    Rational lambda;
    if (P.x == Q.x)  // doubling with y != 0
        lambda = (3 * P.x * P.x + 2 * c.a0 * P.x + c.b0) / (2 * P.y);
    else
        lambda = (Q.y - P.y) / (Q.x - P.x);
    Rational x3 = lambda * lambda - c.a0 - P.x - Q.x;
    Rational y3 = lambda * (P.x - x3) - P.y;
    return AffinePoint::affine(x3, y3);
}

AffinePoint apply_isogeny(const SpecializedCurve& c, const AffinePoint& P) {
    if (!on_curve(c, P)) throw Error(errkind::OffCurve, "isogeny input not on the curve");
    if (P.infinity || (P.x == 0 && P.y == 0)) return AffinePoint::at_infinity();
    Rational xx = P.x * P.x;
    AffinePoint img = AffinePoint::affine(P.y * P.y / xx, P.y * (xx - c.b0) / xx);
    if (!on_curve(quotient_curve(c), img))
        throw Error(errkind::OffCurve, "isogeny image off the quotient curve");
    return img;
}

AffinePoint apply_dual(const SpecializedCurve& cY, const AffinePoint& Q) {
    if (!on_curve(cY, Q)) throw Error(errkind::OffCurve, "dual isogeny input not on the curve");
    if (Q.infinity || (Q.x == 0 && Q.y == 0)) return AffinePoint::at_infinity();
    Rational xx = Q.x * Q.x;
    AffinePoint img = AffinePoint::affine(Q.y * Q.y / (4 * xx), Q.y * (xx - cY.b0) / (8 * xx));
    // Image curve: a = -a_Y/2, b = (a^2 - b_Y)/4.
    Rational a = -cY.a0 / 2;
    SpecializedCurve cX = make_curve(a, (a * a - cY.b0) / 4);
    if (!on_curve(cX, img))
        throw Error(errkind::OffCurve, "dual isogeny image off the covered curve");
    return img;
}

int shioda_tate(const Configuration& cfg, int mw_rank) {
    return 2 + mw_rank + cfg.sum_m_minus_1();
}

Integer det_ns(const Configuration& cfg, const Integer& torsion_order, int rank_ns) {
    Integer p = cfg.prod_m1();
    Integer t2 = torsion_order * torsion_order;
    if (p % t2 != 0)
        throw Error(errkind::NonIntegralDeterminant,
                    "prod m1 = " + p.get_str() + " is not divisible by " + t2.get_str());
    Integer mag = p / t2;
    return ((rank_ns - 1) % 2 == 0) ? mag : -mag;
}

std::string TorsionInfo::group_str() const {
    if (rank2 == 1) return order4 ? "Z/4" : "Z/2";
    return order4 ? "Z/4 x Z/2" : "(Z/2)^2";
}

TorsionInfo compute_torsion(const TwoTorsionSurface& s) {
    TorsionInfo t;
    t.rank2 = two_torsion_rank(s);
    t.order4 = has_order_four_over_sigma(s);
    return t;
}

}  // namespace elk3
