#include "elk3/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "elk3/qdivisor.hpp"

namespace elk3 {

Json poly_to_json(const UniPoly& f) {
    Json arr = Json::array();
    if (f.is_zero()) return arr;
    for (int k = 0; k <= f.degree(); ++k) arr.push_back(rational_str(f.coeff(k)));
    return arr;
}

UniPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw Error(errkind::BadInput, "polynomial must be a JSON array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (c.is_number_integer())
            coeffs.push_back(Rational(c.get<long>()));
        else if (c.is_string())
            coeffs.push_back(parse_rational(c.get<std::string>()));
        else
            throw Error(errkind::BadInput, "polynomial coefficients must be strings");
    }
    return UniPoly(std::move(coeffs));
}

Json surface_to_json(const TwoTorsionSurface& s) {
    Json j;
    j["a"] = poly_to_json(s.a());
    j["b"] = poly_to_json(s.b());
    return j;
}

TwoTorsionSurface surface_from_json(const Json& j) {
    if (!j.contains("a") || !j.contains("b"))
        throw Error(errkind::BadInput, "surface file needs fields 'a' and 'b'");
    return TwoTorsionSurface(poly_from_json(j["a"]), poly_from_json(j["b"]));
}

IntLattice lattice_from_json(const Json& j) {
    if (!j.is_array()) throw Error(errkind::BadInput, "Gram matrix must be a JSON array");
    IntMatrix gram;
    for (const auto& row : j) {
        std::vector<Integer> r;
        for (const auto& x : row) {
            if (x.is_number_integer())
                r.push_back(Integer(x.get<long>()));
            else if (x.is_string())
                r.push_back(Integer(x.get<std::string>()));
            else
                throw Error(errkind::BadInput, "Gram entries must be integers");
        }
        gram.push_back(std::move(r));
    }
    return make_lattice(std::move(gram));
}

Json quadform_to_json(const FiniteQuadForm& F) {
    Json j;
    Json group = Json::array(), q = Json::array();
    for (size_t i = 0; i < F.ngens(); ++i) {
        group.push_back(F.factors[i].get_str());
        q.push_back(rational_str(F.gen_gram[i][i]));
    }
    j["group"] = group;
    j["q"] = q;
    return j;
}

namespace {

Json place_to_json(const SurfacePlace& p) {
    Json j;
    j["place"] = p.at_infinity ? Json("inf") : poly_to_json(p.modulus);
    j["place_str"] = p.place_str();
    j["points"] = p.point_count;
    j["v_a"] = p.v_a == kValInfinity ? Json("inf") : Json(p.v_a);
    j["v_b"] = p.v_b;
    j["v_c"] = p.v_c;
    j["v_delta"] = p.v_delta();
    j["fiber"] = fiber_str(p.fiber);
    return j;
}

}  // namespace

SurfaceReport surface_report(const TwoTorsionSurface& s, int mw_rank) {
    SurfaceReport r;
    r.places = surface_places(s);
    r.configuration = classify_surface(s);
    r.mw_rank = mw_rank;
    r.picard = shioda_tate(r.configuration, mw_rank);
    r.torsion = compute_torsion(s);
    r.det = det_ns(r.configuration, r.torsion.order(), r.picard);
    r.fixed_point_total = 0;
    r.euler_total = 0;
    for (const auto& p : r.places) {
        r.euler_total += p.point_count * p.v_delta();
        if (p.fiber.kind != FiberKind::Regular)
            r.fixed_point_total += p.point_count * fiber_invariants(p.fiber).n_fixed;
    }
    r.notes.push_back("mw_rank = " + std::to_string(mw_rank) +
                      " is an input assumption, not computed");
    r.notes.push_back(
        "torsion is computed from the 2-torsion rank and the 2-divisibility of (0,0); "
        "no further torsion can occur with a 2-torsion section at these fiber types");
    if (r.picard == 17 && r.det > 0)
        r.notes.push_back("NS = E8 + E8 + <" + r.det.get_str() +
                          "> then follows from uniqueness of the lattice in its genus "
                          "(cited, not computed)");
    return r;
}

Json report_to_json(const SurfaceReport& r) {
    Json j;
    Json cfg = Json::array();
    for (const auto& e : r.configuration.entries) {
        Json je;
        je["fiber"] = fiber_str(e.fiber);
        je["count"] = e.count;
        je["place"] = e.place;
        cfg.push_back(je);
    }
    j["configuration"] = cfg;
    j["configuration_str"] = r.configuration.str();
    Json places = Json::array();
    for (const auto& p : r.places) places.push_back(place_to_json(p));
    j["places"] = places;
    j["mw_rank_assumed"] = r.mw_rank;
    j["picard"] = r.picard;
    j["torsion"] = {{"group", r.torsion.group_str()},
                    {"order", r.torsion.order().get_str()},
                    {"two_torsion_rank", r.torsion.rank2},
                    {"order_four_over_sigma", r.torsion.order4}};
    j["det_ns"] = r.det.get_str();
    j["fixed_point_total"] = r.fixed_point_total;
    j["euler_total"] = r.euler_total;
    j["notes"] = r.notes;
    return j;
}

std::string report_to_text(const SurfaceReport& r) {
    std::ostringstream os;
    os << "place                        (v_a,v_b,v_c)  points  fiber\n";
    for (const auto& p : r.places) {
        std::ostringstream vs;
        vs << "(" << (p.v_a == kValInfinity ? std::string("oo") : std::to_string(p.v_a)) << ","
           << p.v_b << "," << p.v_c << ")";
        os << std::left << std::setw(29) << p.place_str() << std::setw(15) << vs.str()
           << std::setw(8) << p.point_count << fiber_str(p.fiber) << "\n";
    }
    os << "configuration: " << r.configuration.str() << "\n";
    os << "picard: " << r.picard << "   (mw_rank = " << r.mw_rank << " assumed)\n";
    os << "torsion: " << r.torsion.group_str() << "\n";
    os << "det NS: " << r.det.get_str() << "\n";
    os << "fixed points: " << r.fixed_point_total << "   euler: " << r.euler_total << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

Json lattice_report(const IntLattice& L) {
    FiniteQuadForm F = discriminant_form(L);
    Json j = quadform_to_json(F);
    j["det"] = lattice_det(L).get_str();
    j["rank"] = L.rank();
    return j;
}

std::string lattice_report_text(const Json& j) {
    std::ostringstream os;
    os << "rank " << j["rank"] << ", det " << j["det"].get<std::string>() << "\n";
    os << "discriminant group: ";
    if (j["group"].empty()) os << "trivial";
    for (size_t i = 0; i < j["group"].size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << j["group"][i].get<std::string>();
    }
    os << "\nq on generators (mod 2Z): ";
    for (size_t i = 0; i < j["q"].size(); ++i) {
        if (i) os << ", ";
        os << j["q"][i].get<std::string>();
    }
    os << "\n";
    return os.str();
}

namespace {

Json config_strings(const Configuration& cfg) {
    Json arr = Json::array();
    Configuration c = cfg;
    for (auto& e : c.entries) e.place.clear();
    c.canonicalize();
    for (const auto& e : c.entries) {
        Json je;
        je["fiber"] = fiber_str(e.fiber);
        je["count"] = e.count;
        arr.push_back(je);
    }
    return arr;
}

}  // namespace

Json theorem_search_report(const SearchConstraints& c) {
    SearchResult r = admissible_d_search(c);
    Json j;
    j["admissible"] = r.admissible;
    j["configurations_enumerated"] = r.configurations_enumerated;
    Json witnesses;
    for (const auto& [d, ws] : r.witnesses) {
        Json arr = Json::array();
        for (const auto& w : ws) {
            Json jw;
            jw["x_config"] = config_strings(w.x_config);
            jw["x_config_str"] = w.x_config.str();
            jw["y_config"] = config_strings(w.y_config);
            jw["y_config_str"] = w.y_config.str();
            jw["torsion_x"] = w.torsion_x.get_str();
            jw["torsion_y"] = w.torsion_y.get_str();
            if (d == 15) jw["caveat"] = kD15Caveat;
            arr.push_back(jw);
        }
        witnesses[std::to_string(d)] = arr;
    }
    j["witnesses"] = witnesses;
    Json degen;
    for (long d : r.admissible) {
        Json arr = Json::array();
        for (const auto& dw : degeneration_report(d, r)) {
            Json jd;
            jd["x_config_str"] = dw.x_config.str();
            Json asm_arr = Json::array();
            for (const auto& fa : dw.assembly) {
                Json ja;
                ja["fiber"] = fiber_str(fa.fiber);
                ja["count"] = fa.count;
                ja["from_I1"] = fa.from_i1;
                ja["from_I2"] = fa.from_i2;
                asm_arr.push_back(ja);
            }
            jd["assembly"] = asm_arr;
            jd["x_chain"] = {dw.x_chain[0], dw.x_chain[1], dw.x_chain[2]};
            jd["y_chain"] = {dw.y_chain[0], dw.y_chain[1], dw.y_chain[2]};
            arr.push_back(jd);
        }
        degen[std::to_string(d)] = arr;
    }
    j["degenerations"] = degen;
    j["d15_caveat"] = kD15Caveat;
    j["order8_probe"] = {{"candidates", r.order8_candidates},
                         {"survivors", r.order8_survivors},
                         {"notes", r.order8_notes},
                         {"comment",
                          "torsion orders are fixed to {2, 4}; the recorded order-8 "
                          "survivors pass the same necessary conditions but add no new d"}};
    return j;
}

std::string theorem_search_text(const Json& j) {
    std::ostringstream os;
    os << "admissible d: ";
    for (size_t i = 0; i < j["admissible"].size(); ++i) {
        if (i) os << ", ";
        os << j["admissible"][i].get<long>();
    }
    os << "\nconfigurations enumerated: " << j["configurations_enumerated"].get<long>() << "\n";
    for (const auto& [d, ws] : j["witnesses"].items()) {
        os << "d = " << d << ":\n";
        for (const auto& w : ws)
            os << "  X: " << w["x_config_str"].get<std::string>()
               << "   Y: " << w["y_config_str"].get<std::string>() << "   (tor "
               << w["torsion_x"].get<std::string>() << ", " << w["torsion_y"].get<std::string>()
               << ")\n";
    }
    os << "caveat for d = 15: " << j["d15_caveat"].get<std::string>() << "\n";
    return os.str();
}

std::optional<AffinePoint> find_rational_point(const SpecializedCurve& c) {
    // Small-x scan; exact square test on x(x^2 + a0 x + b0).
    for (int den = 1; den <= 3; ++den)
        for (int num = -36; num <= 36; ++num) {
            if (num == 0) continue;
            Rational x = make_rational(num, den);
            Rational rhs = x * (x * x + c.a0 * x + c.b0);
            if (rhs == 0) continue;  // 2-torsion with y = 0; wanted points double to it
            if (auto y = rational_sqrt_exact(rhs)) return AffinePoint::affine(x, *y);
        }
    return std::nullopt;
}

Json isogeny_check_report(const TwoTorsionSurface& s, const std::vector<Rational>& t0s) {
    Json rows = Json::array();
    bool all_ok = true;
    for (const Rational& t0 : t0s) {
        Json row;
        row["t0"] = rational_str(t0);
        SpecializedCurve cx = specialize(s, t0);
        row["curve"] = {rational_str(cx.a0), rational_str(cx.b0)};
        auto pt = find_rational_point(cx);
        if (!pt) {
            row["status"] = "no rational point with small x";
            rows.push_back(row);
            continue;
        }
        row["point"] = {rational_str(pt->x), rational_str(pt->y)};
        AffinePoint img = apply_isogeny(cx, *pt);
        AffinePoint back = apply_dual(quotient_curve(cx), img);
        AffinePoint dbl = group_law(cx, *pt, *pt);
        bool ok = back == dbl;
        row["phi"] = img.infinity ? Json("O") : Json({rational_str(img.x), rational_str(img.y)});
        row["dual_of_phi"] =
            back.infinity ? Json("O") : Json({rational_str(back.x), rational_str(back.y)});
        row["double"] = dbl.infinity ? Json("O") : Json({rational_str(dbl.x), rational_str(dbl.y)});
        row["ok"] = ok;
        if (!ok) all_ok = false;
        rows.push_back(row);
    }
    Json j;
    j["checks"] = rows;
    j["all_ok"] = all_ok;
    return j;
}

std::string isogeny_check_text(const Json& j) {
    std::ostringstream os;
    for (const auto& row : j["checks"]) {
        os << "t0 = " << row["t0"].get<std::string>() << ": ";
        if (row.contains("status")) {
            os << row["status"].get<std::string>() << "\n";
            continue;
        }
        os << "P = (" << row["point"][0].get<std::string>() << ", "
           << row["point"][1].get<std::string>() << ")  dual(phi(P)) "
           << (row["ok"].get<bool>() ? "==" : "!=") << " 2P\n";
    }
    os << (j["all_ok"].get<bool>() ? "isogeny identity verified" : "isogeny identity FAILED")
       << "\n";
    return os.str();
}

namespace {

// Fiber table cell at one of the three marked places, in the table's
// untagged notation.
std::string cell_str(const SurfacePlace& p) {
    switch (p.fiber.kind) {
        case FiberKind::Regular: return "reg";
        case FiberKind::I: return "I" + std::to_string(p.fiber.n);
        case FiberKind::IStar: return "I" + std::to_string(p.fiber.n) + "*";
        case FiberKind::III: return "III";
        case FiberKind::IIIStar: return "III*";
    }
    return "?";
}

UniPoly sample_cubic() {
    // P = t^3 + t + 1, the committed sample for "generic P".
    return UniPoly(std::vector<Rational>{1, 1, 0, 1});
}

Json family_column(const std::string& name, const TwoTorsionSurface& s) {
    Json col;
    col["surface"] = name;
    std::string at0, atinf;
    std::map<std::string, int> c_group;  // fiber cell -> point count
    for (const auto& p : surface_places(s)) {
        if (p.at_infinity) {
            atinf = cell_str(p);
        } else if (p.modulus == UniPoly::t()) {
            at0 = cell_str(p);
        } else {
            c_group[cell_str(p)] += p.point_count;
        }
    }
    if (at0.empty()) at0 = "reg";
    std::string c_cell;
    for (const auto& [cell, count] : c_group) {
        if (!c_cell.empty()) c_cell += " + ";
        c_cell += (count > 1 ? std::to_string(count) : std::string()) + cell;
    }
    col["t=0"] = at0;
    col["c=0"] = c_cell.empty() ? "-" : c_cell;
    col["t=inf"] = atinf;
    return col;
}

}  // namespace

Json paper_tables_report() {
    Json j;
    UniPoly P = sample_cubic();
    j["P"] = P.str();

    Json fiber_table = Json::array();
    for (int d = 0; d <= 8; ++d) {
        TwoTorsionSurface x = build_family(family_xd(d, P));
        fiber_table.push_back(family_column("X" + std::to_string(d), x));
    }
    for (int d = 0; d <= 8; ++d) {
        TwoTorsionSurface x = build_family(family_xd(d, P));
        fiber_table.push_back(family_column("Y" + std::to_string(d), quotient_surface(x)));
    }
    j["fiber_table"] = fiber_table;

    Json dets = Json::array();
    for (int d = 0; d <= 6; ++d) {
        TwoTorsionSurface x = build_family(family_xd(d, P));
        int rank = (d == 0) ? 18 : 17;
        for (bool quotient : {false, true}) {
            const TwoTorsionSurface s = quotient ? quotient_surface(x) : x;
            Configuration cfg = classify_surface(s);
            TorsionInfo tor = compute_torsion(s);
            Json row;
            row["surface"] = (quotient ? "Y" : "X") + std::to_string(d);
            row["torsion"] = tor.group_str();
            row["det_ns"] = det_ns(cfg, tor.order(), rank).get_str();
            dets.push_back(row);
        }
    }
    {
        Rational a1(0), a2(1), a3(1);
        for (int n : {5, 7}) {
            TwoTorsionSurface x = build_family(family_xprime(n, a1, a2, a3));
            Configuration cfg = classify_surface(x);
            TorsionInfo tor = compute_torsion(x);
            Json row;
            row["surface"] = "X'" + std::to_string(n);
            row["torsion"] = tor.group_str();
            row["det_ns"] = det_ns(cfg, tor.order(), 17).get_str();
            dets.push_back(row);
        }
    }
    j["determinants"] = dets;

    Json thetas = Json::array();
    for (int m = 1; m <= 8; ++m) {
        QDivisor th = theta_divisor(m);
        Json row;
        row["m"] = m;
        row["norm"] = rational_str(qdiv_inner(th, th));
        row["order"] = qdiv_order_mod_lattice(th).get_str();
        thetas.push_back(row);
    }
    j["theta_norms"] = thetas;

    Json gammas = Json::array();
    for (int d = 1; d <= 6; ++d) {
        QDivisor g = gamma_xd(d);
        Json row;
        row["divisor"] = "Gamma(X" + std::to_string(d) + ")";
        row["norm"] = rational_str(qdiv_inner(g, g));
        row["order"] = qdiv_order_mod_lattice(g).get_str();
        row["in_dual"] = qdiv_in_dual(g);
        gammas.push_back(row);
    }
    for (int n : {5, 7}) {
        QDivisor g = gamma_xprime(n);
        Json row;
        row["divisor"] = "Gamma(X'" + std::to_string(n) + ")";
        row["norm"] = rational_str(qdiv_inner(g, g));
        row["order"] = qdiv_order_mod_lattice(g).get_str();
        row["in_dual"] = qdiv_in_dual(g);
        gammas.push_back(row);
    }
    j["gamma_values"] = gammas;
    return j;
}

std::string paper_tables_text(const Json& j) {
    std::ostringstream os;
    os << "families with P = " << j["P"].get<std::string>() << "\n\n";
    os << std::left << std::setw(10) << "surface" << std::setw(12) << "t=0" << std::setw(12)
       << "c=0" << std::setw(12) << "t=inf" << "\n";
    for (const auto& col : j["fiber_table"])
        os << std::left << std::setw(10) << col["surface"].get<std::string>() << std::setw(12)
           << col["t=0"].get<std::string>() << std::setw(12) << col["c=0"].get<std::string>()
           << std::setw(12) << col["t=inf"].get<std::string>() << "\n";
    os << "\n" << std::left << std::setw(10) << "surface" << std::setw(12) << "torsion"
       << "det NS\n";
    for (const auto& row : j["determinants"])
        os << std::left << std::setw(10) << row["surface"].get<std::string>() << std::setw(12)
           << row["torsion"].get<std::string>() << row["det_ns"].get<std::string>() << "\n";
    os << "\ntheta norms: ";
    for (const auto& row : j["theta_norms"])
        os << "m=" << row["m"].get<int>() << ": " << row["norm"].get<std::string>() << "  ";
    os << "\n";
    for (const auto& row : j["gamma_values"])
        os << row["divisor"].get<std::string>() << ": norm " << row["norm"].get<std::string>()
           << ", order " << row["order"].get<std::string>() << "\n";
    return os.str();
}

}  // namespace elk3
