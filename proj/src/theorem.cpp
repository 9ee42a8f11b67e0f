#include "elk3/theorem.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "elk3/error.hpp"
#include "elk3/quadform.hpp"

namespace elk3 {

const char* const kD15Caveat =
    "necessary conditions only: the surviving d = 15 configuration is known not to be "
    "realized by a K3 surface with transcendental lattice M_15; realizability is outside "
    "the scope of this search";

std::vector<FiberType> allowed_fiber_alphabet() {
    const int max_sum = 15, max_fixed = 8;
    std::vector<FiberType> candidates;
    for (int n = 1; n <= max_sum + 1; ++n) {
        candidates.push_back(fiber_I(n, Action::I));
        if (n % 2 == 0) candidates.push_back(fiber_I(n, Action::II));
    }
    for (int n = 0; n + 4 <= max_sum + 1; ++n) {
        candidates.push_back(fiber_IStar(n, Action::I));
        if (n % 2 == 0 && n > 0) candidates.push_back(fiber_IStar(n, Action::II));
    }
    candidates.push_back(fiber_III());
    candidates.push_back(fiber_IIIStar());

    std::vector<FiberType> out;
    for (FiberType f : candidates) {
        FiberInvariants inv = fiber_invariants(f);
        if (inv.m - 1 > max_sum) continue;
        if (inv.n_fixed > max_fixed) continue;
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), fiber_less);
    return out;
}

std::vector<Configuration> enumerate_configurations(const SearchConstraints& c) {
    std::vector<FiberType> alphabet = allowed_fiber_alphabet();
    struct Cost {
        int m1s, nfx, ord;
    };
    std::vector<Cost> costs;
    for (FiberType f : alphabet) {
        FiberInvariants inv = fiber_invariants(f);
        costs.push_back({inv.m - 1, inv.n_fixed, inv.ord_delta});
    }

    std::vector<Configuration> out;
    std::vector<int> counts(alphabet.size(), 0);

    std::function<void(size_t, int, int, int)> rec = [&](size_t i, int s, int n, int e) {
        if (s == 0 && n == 0 && e == 0) {
            Configuration cfg;
            for (size_t j = 0; j < counts.size(); ++j)
                if (counts[j] > 0) cfg.add(alphabet[j], counts[j]);
            cfg.canonicalize();
            out.push_back(std::move(cfg));
            return;
        }
        if (i == alphabet.size() || e <= 0) return;
        const Cost& cost = costs[i];
        int max_k = e / cost.ord;
        if (cost.m1s > 0) max_k = std::min(max_k, s / cost.m1s);
        if (cost.nfx > 0) max_k = std::min(max_k, n / cost.nfx);
        for (int k = 0; k <= max_k; ++k) {
            counts[i] = k;
            rec(i + 1, s - k * cost.m1s, n - k * cost.nfx, e - k * cost.ord);
        }
        counts[i] = 0;
    };
    rec(0, c.sum_m_minus_1(), c.fixed_points, c.euler);
    return out;
}

namespace {

// Cyclic orders of the discriminant groups of the fiber root lattices.
std::vector<Integer> trivial_lattice_orders(const Configuration& cfg) {
    std::vector<Integer> orders;
    for (const auto& e : cfg.entries) {
        FiberInvariants inv = fiber_invariants(e.fiber);
        for (int i = 0; i < e.count; ++i) {
            switch (inv.root_lattice.family) {
                case RootLatticeRef::Family::A:
                    if (inv.root_lattice.n >= 1) orders.push_back(inv.root_lattice.n + 1);
                    break;
                case RootLatticeRef::Family::D:
                    if (inv.root_lattice.n % 2 == 0) {
                        orders.push_back(2);
                        orders.push_back(2);
                    } else {
                        orders.push_back(4);
                    }
                    break;
                case RootLatticeRef::Family::E7:
                    orders.push_back(2);
                    break;
                case RootLatticeRef::Family::None:
                    break;
            }
        }
    }
    return orders;
}

std::vector<std::pair<Integer, int>> prime_power_parts(Integer n) {
    std::vector<std::pair<Integer, int>> parts;  // (p^e, e) with p^e || n
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        Integer pe = 1;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            pe *= p;
            ++e;
        }
        parts.emplace_back(pe, e);
    }
    if (n > 1) parts.emplace_back(n, 1);
    return parts;
}

bool orders_support(const std::vector<Integer>& orders, const Integer& value) {
    for (const auto& [pe, e] : prime_power_parts(value))
        if (!has_element_of_order(orders, pe)) return false;
    return true;
}

bool config_embeds_order(const Configuration& cfg, int torsion_order) {
    if (torsion_order == 2) return true;  // the 2-torsion section always embeds
    std::vector<TorsionShape> shapes;
    if (torsion_order == 4)
        shapes = {TorsionShape::Z4, TorsionShape::Z2xZ2};
    else if (torsion_order == 8)
        shapes = {TorsionShape::Z8, TorsionShape::Z4xZ2, TorsionShape::Z2xZ2xZ2};
    else if (torsion_order == 16)
        shapes = {TorsionShape::Z16};  // rank >= 2 shapes of order 16 embed even more rarely
    else
        return false;
    for (TorsionShape g : shapes) {
        bool all = true;
        for (const auto& e : cfg.entries)
            if (!torsion_embeds(e.fiber, g)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace

SearchResult admissible_d_search(const SearchConstraints& c) {
    SearchResult result;
    std::vector<Configuration> configs = enumerate_configurations(c);
    result.configurations_enumerated = static_cast<long>(configs.size());

    for (const auto& xcfg : configs) {
        Configuration ycfg = quotient_configuration(xcfg);
        ycfg.canonicalize();

        // The quotient surface is the same kind of K3.
        if (ycfg.sum_ord_delta() != c.euler) continue;
        if (ycfg.sum_m_minus_1() != c.sum_m_minus_1()) continue;
        if (ycfg.sum_n_fixed() != c.fixed_points) continue;

        Integer pm1_x = xcfg.prod_m1();
        Integer pm1_y = ycfg.prod_m1();
        std::vector<Integer> orders_x = trivial_lattice_orders(xcfg);
        std::vector<Integer> orders_y = trivial_lattice_orders(ycfg);

        long last_d = 0;
        auto try_torsion = [&](int tor_x, int tor_y, bool record) -> bool {
            // |X_tor| = 2^eps |Y_tor| with eps in {-1, 0, 1}
            if (tor_x * 2 != tor_y && tor_x != tor_y && tor_x != 2 * tor_y) return false;
            if (!config_embeds_order(xcfg, tor_x)) return false;
            if (!config_embeds_order(ycfg, tor_y)) return false;
            Integer tx2 = Integer(tor_x) * tor_x, ty2 = Integer(tor_y) * tor_y;
            if (pm1_x % tx2 != 0 || pm1_y % ty2 != 0) return false;
            Integer det_x = pm1_x / tx2;  // = 2d
            Integer det_y = pm1_y / ty2;  // must be 2^5 * 2d
            if (det_x % 2 != 0 || det_x <= 0) return false;
            Integer d = det_x / 2;
            if (det_y != 32 * det_x) return false;
            // T_X*/T_X = Z/2d must inject into a subquotient of the
            // trivial-lattice group; same for (Z/2)^4 x Z/4d on Y.
            if (!orders_support(orders_x, det_x)) return false;
            if (!orders_support(orders_y, 4 * d)) return false;
            if (pm1_y < 8 * pm1_x)
                throw Error(errkind::BadInput,
                            "determinant equations violate prod m1(Y) >= 8 prod m1(X)");
            last_d = static_cast<long>(d.get_si());
            if (record) {
                CandidateWitness w;
                w.d = static_cast<long>(d.get_si());
                w.x_config = xcfg;
                w.y_config = ycfg;
                w.torsion_x = tor_x;
                w.torsion_y = tor_y;
                result.witnesses[w.d].push_back(std::move(w));
            }
            return true;
        };

        for (int tx : c.torsion_options_x)
            for (int ty : c.torsion_options_y) try_torsion(tx, ty, true);

        // Torsion order 8 probe: configurations whose component groups
        // admit an order-8 group at all, then the same determinant
        // battery.  Survivors are recorded as documentation of the {2, 4}
        // cutoff; empirically they only repeat already-admissible d.
        if (config_embeds_order(xcfg, 8)) {
            ++result.order8_candidates;
            for (int ty : {4, 8, 16})
                if (try_torsion(8, ty, false)) {
                    ++result.order8_survivors;
                    result.order8_notes.push_back("X " + xcfg.str() + " with |tor X| = 8, |tor Y| = " +
                                                  std::to_string(ty) + " reproduces d = " +
                                                  std::to_string(last_d));
                    break;
                }
        }
    }

    for (const auto& [d, ws] : result.witnesses) result.admissible.push_back(d);
    std::sort(result.admissible.begin(), result.admissible.end());
    return result;
}

namespace {

std::string plain_config_str(const Configuration& cfg) {
    // Untagged rendering in canonical order, e.g. "6I1 + I2 + I6 + I10".
    Configuration c = cfg;
    for (auto& e : c.entries) e.place.clear();
    c.canonicalize();
    std::vector<std::pair<FiberType, int>> items;
    for (const auto& e : c.entries) {
        bool found = false;
        for (auto& [f, cnt] : items)
            if (f.kind == e.fiber.kind && f.n == e.fiber.n) {
                cnt += e.count;
                found = true;
                break;
            }
        if (!found) items.emplace_back(e.fiber, e.count);
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, cnt] : items) {
        if (!first) os << " + ";
        if (cnt > 1) os << cnt;
        switch (f.kind) {
            case FiberKind::I: os << "I" << f.n; break;
            case FiberKind::IStar: os << "I" << f.n << "*"; break;
            case FiberKind::III: os << "III"; break;
            case FiberKind::IIIStar: os << "III*"; break;
            case FiberKind::Regular: os << "reg"; break;
        }
        first = false;
    }
    return first ? "(none)" : os.str();
}

}  // namespace

std::vector<DegenerationWitness> degeneration_report(long d, const SearchResult& r) {
    if (!std::binary_search(r.admissible.begin(), r.admissible.end(), d))
        throw Error(errkind::NotAdmissible, "d = " + std::to_string(d) + " is not admissible");

    // Distinct X configurations among the witnesses for d.
    std::vector<Configuration> configs;
    for (const auto& w : r.witnesses.at(d)) {
        bool dup = false;
        for (const auto& c : configs)
            if (c.same_fibers(w.x_config)) dup = true;
        if (!dup) configs.push_back(w.x_config);
    }

    std::vector<DegenerationWitness> out;
    for (const auto& cfg : configs) {
        DegenerationWitness dw;
        dw.x_config = cfg;

        int i1_used = 0, i2_used = 0;
        for (const auto& e : cfg.entries) {
            auto [vb, vc] = fiber_valuations(e.fiber);
            FiberAssembly fa;
            fa.fiber = e.fiber;
            fa.count = e.count;
            fa.from_i1 = vc;  // each collapsed I_1 raises ord Delta by 1
            fa.from_i2 = vb;  // each collapsed I_2 raises ord b by 1
            // ord Delta bookkeeping per chain.
            if (fiber_invariants(e.fiber).ord_delta != 2 * vb + vc)
                throw Error(errkind::BadInput, "ord Delta bookkeeping failed");
            i1_used += e.count * vc;
            i2_used += e.count * vb;
            dw.assembly.push_back(fa);
        }
        if (i1_used != 8 || i2_used != 8)
            throw Error(errkind::BadInput, "confluence does not consume 8 I_1 + 8 I_2");

        // Step 1 applies the pure I_2 merges, step 2 the rest.
        Configuration start, mid;
        start.add(fiber_I(2, Action::II), 8);
        start.add(fiber_I(1, Action::I), 8);
        int i2_left = 8;
        for (const auto& e : cfg.entries) {
            auto [vb, vc] = fiber_valuations(e.fiber);
            if (vc == 0 && vb >= 2) {
                mid.add(e.fiber, e.count);
                i2_left -= e.count * vb;
            }
        }
        if (i2_left > 0) mid.add(fiber_I(2, Action::II), i2_left);
        mid.add(fiber_I(1, Action::I), 8);
        mid.canonicalize();

        Configuration final_cfg = cfg;
        dw.x_chain = {plain_config_str(start), plain_config_str(mid),
                      plain_config_str(final_cfg)};
        dw.y_chain = {plain_config_str(quotient_configuration(start)),
                      plain_config_str(quotient_configuration(mid)),
                      plain_config_str(quotient_configuration(final_cfg))};
        out.push_back(std::move(dw));
    }
    return out;
}

}  // namespace elk3
