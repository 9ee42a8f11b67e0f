#include <doctest.h>

#include <set>

#include "elk3/families.hpp"
#include "elk3/theorem.hpp"

using namespace elk3;

TEST_CASE("the fiber alphabet matches the Picard-17 list") {
    auto alphabet = allowed_fiber_alphabet();

    std::set<std::string> untagged, type_ii_only;
    std::set<std::string> tags;
    for (FiberType f : alphabet) tags.insert(fiber_str(f));
    for (FiberType f : alphabet) {
        std::string base;
        switch (f.kind) {
            case FiberKind::I: base = "I" + std::to_string(f.n); break;
            case FiberKind::IStar: base = "I*" + std::to_string(f.n); break;
            case FiberKind::III: base = "III"; break;
            case FiberKind::IIIStar: base = "III*"; break;
            default: base = "?";
        }
        untagged.insert(base);
        if (f.action == Action::II && tags.find(base + "(i)") == tags.end() &&
            f.kind != FiberKind::III && f.kind != FiberKind::IIIStar)
            type_ii_only.insert(base);
    }

    std::set<std::string> expected = {"I1", "I2", "I3", "I4",  "I5",  "I6",  "I7",  "I8",
                                      "I10", "I12", "I14", "I16", "I*0", "I*1", "I*2", "I*3",
                                      "I*4", "I*5", "I*6", "I*8", "I*10", "III", "III*"};
    CHECK(untagged == expected);
    CHECK(type_ii_only == std::set<std::string>{"I10", "I12", "I14", "I16", "I*8", "I*10"});

    // I9 appears in no variant: type (i) has 9 fixed points, (ii) needs n even
    CHECK(untagged.count("I9") == 0);
    CHECK(tags.count("I16(ii)") == 1);
    CHECK(tags.count("I16(i)") == 0);
    CHECK(tags.count("III*") == 1);
}

TEST_CASE("configuration stream") {
    SearchConstraints c;
    auto configs = enumerate_configurations(c);
    CHECK(configs.size() > 0);

    auto contains = [&](const Configuration& want) {
        for (const auto& cfg : configs)
            if (cfg.same_fibers(want)) return true;
        return false;
    };

    Configuration x1;  // the X_1 configuration
    x1.add(fiber_I(2, Action::II));
    x1.add(fiber_IStar(10, Action::II));
    x1.add(fiber_I(1, Action::I), 6);
    CHECK(contains(x1));

    Configuration d15;
    d15.add(fiber_I(1, Action::I), 6);
    d15.add(fiber_I(2, Action::I));
    d15.add(fiber_I(6, Action::II));
    d15.add(fiber_I(10, Action::II));
    CHECK(contains(d15));

    Configuration generic;  // fails sum(m-1) = 15
    generic.add(fiber_I(1, Action::I), 8);
    generic.add(fiber_I(2, Action::II), 8);
    CHECK_FALSE(contains(generic));

    for (const auto& cfg : configs) {
        CHECK(cfg.sum_m_minus_1() == 15);
        CHECK(cfg.sum_n_fixed() == 8);
        CHECK(cfg.sum_ord_delta() == 24);
    }

    // determinism
    auto again = enumerate_configurations(c);
    REQUIRE(again.size() == configs.size());
    for (size_t i = 0; i < configs.size(); ++i) CHECK(again[i].same_fibers(configs[i]));
}

TEST_CASE("admissible d search reproduces the classification") {
    SearchConstraints c;
    SearchResult r = admissible_d_search(c);
    CHECK(r.admissible == std::vector<long>{1, 2, 3, 5, 7, 15});

    // d = 15 has exactly one configuration
    const auto& w15 = r.witnesses.at(15);
    REQUIRE(w15.size() >= 1);
    Configuration want_x;
    want_x.add(fiber_I(1, Action::I), 6);
    want_x.add(fiber_I(2, Action::I));
    want_x.add(fiber_I(6, Action::II));
    want_x.add(fiber_I(10, Action::II));
    Configuration want_y;
    want_y.add(fiber_I(2, Action::II), 6);
    want_y.add(fiber_I(4, Action::II));
    want_y.add(fiber_I(3, Action::I));
    want_y.add(fiber_I(5, Action::I));
    for (const auto& w : w15) {
        CHECK(w.x_config.same_fibers(want_x));
        CHECK(w.y_config.same_fibers(want_y));
        CHECK(w.torsion_x == 2);
        CHECK(w.torsion_y == 2);
    }

    // every witness satisfies the bilateral sums
    for (const auto& [d, ws] : r.witnesses)
        for (const auto& w : ws) {
            CHECK(w.x_config.sum_n_fixed() == 8);
            CHECK(w.y_config.sum_n_fixed() == 8);
            CHECK(w.x_config.sum_ord_delta() == 24);
            CHECK(w.y_config.sum_ord_delta() == 24);
            CHECK(w.y_config.sum_m_minus_1() == 15);
        }

    // every admissible d has a witness realized by an actual family
    // surface: X_1, X_3, X_5 directly, X_8 for d = 2 (T = M_2), X'_7 for
    // d = 7, and the d = 15 configuration is the forced one
    UniPoly cubic = UniPoly(std::vector<Rational>{1, 1, 0, 1});
    auto realized_by = [&](int d, const Configuration& cfg) {
        auto it = r.witnesses.find(d);
        if (it == r.witnesses.end()) return false;
        for (const auto& w : it->second)
            if (w.x_config.same_fibers(cfg)) return true;
        return false;
    };
    for (int d : {1, 3, 5})
        CHECK(realized_by(d, classify_surface(build_family(family_xd(d, cubic)))));
    CHECK(realized_by(2, classify_surface(build_family(family_xd(8, cubic)))));
    CHECK(realized_by(7, classify_surface(build_family(family_xprime(7, 0, 1, 1)))));

    // the X_d configurations for even d fail the Y-side element-order
    // test, as the quotient lattice argument demands
    for (int d : {2, 4, 6})
        CHECK_FALSE(realized_by(d, classify_surface(build_family(family_xd(d, cubic)))));

    // the order-8 probe finds no new d: its survivors repeat {1, 3}
    CHECK(r.order8_candidates > 0);
    CHECK(r.order8_survivors == 3);
    for (const auto& note : r.order8_notes) {
        bool known = note.find("d = 1") != std::string::npos ||
                     note.find("d = 3") != std::string::npos;
        CHECK(known);
    }
}

TEST_CASE("degeneration bookkeeping") {
    SearchConstraints c;
    SearchResult r = admissible_d_search(c);

    auto d15 = degeneration_report(15, r);
    REQUIRE(d15.size() == 1);
    CHECK(d15[0].x_chain[0] == "8I1 + 8I2");
    CHECK(d15[0].x_chain[1] == "8I1 + I6 + I10");
    CHECK(d15[0].x_chain[2] == "6I1 + I2 + I6 + I10");
    CHECK(d15[0].y_chain[2] == "6I2 + I3 + I4 + I5");
    int i1 = 0, i2 = 0;
    for (const auto& fa : d15[0].assembly) {
        i1 += fa.count * fa.from_i1;
        i2 += fa.count * fa.from_i2;
    }
    CHECK(i1 == 8);
    CHECK(i2 == 8);

    for (long d : r.admissible) CHECK(degeneration_report(d, r).size() >= 1);
    CHECK_THROWS_WITH_AS(degeneration_report(4, r), doctest::Contains("NotAdmissible"), Error);
}
