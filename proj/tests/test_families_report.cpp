#include <doctest.h>

#include "elk3/report.hpp"
#include "support/gen.hpp"

using namespace elk3;
using testgen::P;

TEST_CASE("family construction") {
    TwoTorsionSurface x1 = build_family(family_xd(1, P({1, 0, 0, 1})));
    CHECK(x1.a() == P({1, 0, 0, 1}));
    CHECK(x1.b() == P({0, 1}));

    TwoTorsionSurface x7 = build_family(family_xprime(7, 0, 0, 1));
    CHECK(x7.a() == P({1, 0, 0, -1, 2}));                      // 2t^4 - t^3 + 1
    CHECK(x7.b() == UniPoly::monomial(7, 1) * P({-1, 1}));     // t^7 (t - 1)

    CHECK_THROWS_WITH_AS(family_xd(9, P({1, 0, 0, 1})),
                         doctest::Contains("InvalidFamilyParameter"), Error);
    CHECK_THROWS_AS(family_xd(2, P({1, 1})), Error);
    CHECK_THROWS_AS(family_xprime(6, 0, 0, 1), Error);
}

TEST_CASE("polynomial and surface JSON round-trips") {
    Json j = Json::array({"0", "1/2", "3"});
    UniPoly f = poly_from_json(j);
    CHECK(f == UniPoly(std::vector<Rational>{0, Rational(1, 2), 3}));
    CHECK(poly_to_json(f) == j);
    CHECK(poly_to_json(UniPoly::zero()) == Json::array());

    TwoTorsionSurface s = build_family(family_xd(3, P({1, 1, 0, 1})));
    TwoTorsionSurface back = surface_from_json(surface_to_json(s));
    CHECK(back.a() == s.a());
    CHECK(back.b() == s.b());

    CHECK_THROWS_AS(poly_from_json(Json::array({"x"})), Error);
    CHECK_THROWS_AS(surface_from_json(Json::object()), Error);
}

TEST_CASE("surface report for X_8") {
    TwoTorsionSurface s = build_family(family_xd(8, P({1, 1, 0, 1})));
    SurfaceReport r = surface_report(s, 0);
    CHECK(r.picard == 17);
    CHECK(r.torsion.group_str() == "Z/2");
    CHECK(r.det == 4);
    CHECK(r.fixed_point_total == 8);
    CHECK(r.euler_total == 24);
    CHECK(r.configuration.str() == "8I1(i) + I16(ii)");

    Json j = report_to_json(r);
    CHECK(j["picard"] == 17);
    CHECK(j["det_ns"] == "4");
    CHECK(j["torsion"]["group"] == "Z/2");
    bool cited = false;
    for (const auto& n : j["notes"])
        if (n.get<std::string>().find("cited") != std::string::npos) cited = true;
    CHECK(cited);
    CHECK(report_to_text(r).find("picard: 17") != std::string::npos);
}

TEST_CASE("lattice report") {
    Json gram = Json::parse("[[0,2],[2,0]]");
    Json j = lattice_report(lattice_from_json(gram));
    CHECK(j["group"] == Json::array({"2", "2"}));
    CHECK(j["det"] == "-4");
    CHECK(lattice_report_text(j).find("Z/2") != std::string::npos);
}

TEST_CASE("paper tables reproduce the family data") {
    Json j = paper_tables_report();
    REQUIRE(j["fiber_table"].size() == 18);
    auto col = [&](const std::string& name) -> Json {
        for (const auto& c : j["fiber_table"])
            if (c["surface"] == name) return c;
        REQUIRE(false);
        return {};
    };
    CHECK(col("X0")["t=0"] == "reg");
    CHECK(col("X0")["t=inf"] == "I12*");
    CHECK(col("X3")["t=0"] == "I6");
    CHECK(col("X3")["c=0"] == "6I1");
    CHECK(col("X3")["t=inf"] == "I6*");
    CHECK(col("X7")["t=inf"] == "III");
    CHECK(col("X8")["t=inf"] == "reg");
    CHECK(col("Y5")["t=0"] == "I5");
    CHECK(col("Y5")["c=0"] == "6I2");
    CHECK(col("Y5")["t=inf"] == "I1*");

    auto det_of = [&](const std::string& name) -> std::string {
        for (const auto& row : j["determinants"])
            if (row["surface"] == name) return row["det_ns"].get<std::string>();
        REQUIRE(false);
        return {};
    };
    CHECK(det_of("X0") == "-1");
    CHECK(det_of("X4") == "8");
    CHECK(det_of("Y3") == "192");   // 2^6 * 3
    CHECK(det_of("Y4") == "64");    // 2^4 * 4
    CHECK(det_of("X'5") == "30");
    CHECK(det_of("X'7") == "14");

    CHECK(paper_tables_text(j).find("X0") != std::string::npos);
}

TEST_CASE("isogeny check report") {
    // (1, 1) is a section: b = -a with a = t^3 + 1
    TwoTorsionSurface s(P({1, 0, 0, 1}), P({-1, 0, 0, -1}));
    Json j = isogeny_check_report(s, {Rational(1), Rational(2), Rational(-2)});
    CHECK(j["all_ok"] == true);
    for (const auto& row : j["checks"]) {
        REQUIRE(row.contains("ok"));
        CHECK(row["ok"] == true);
    }
    CHECK(isogeny_check_text(j).find("verified") != std::string::npos);
}

TEST_CASE("theorem search report carries the caveat") {
    SearchConstraints c;
    Json j = theorem_search_report(c);
    CHECK(j["admissible"] == Json::array({1, 2, 3, 5, 7, 15}));
    CHECK(j["d15_caveat"].get<std::string>() == kD15Caveat);
    REQUIRE(j["witnesses"].contains("15"));
    for (const auto& w : j["witnesses"]["15"])
        CHECK(w["caveat"].get<std::string>() == kD15Caveat);
    CHECK(j["order8_probe"]["survivors"] == 3);
    CHECK(j["order8_probe"]["notes"].size() == 3);
    CHECK(j["degenerations"].contains("15"));
    CHECK(theorem_search_text(j).find("admissible d: 1, 2, 3, 5, 7, 15") != std::string::npos);
}
