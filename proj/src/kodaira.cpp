#include "elk3/kodaira.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "elk3/places.hpp"

namespace elk3 {

FiberType fiber_I(int n, Action a) {
    if (n < 1) throw Error(errkind::InvalidParameter, "I_n needs n >= 1");
    if (a == Action::None) throw Error(errkind::InvalidParameter, "I_n carries an action tag");
    if (a == Action::II && n % 2 != 0)
        throw Error(errkind::InvalidParameter, "I_n of type (ii) needs n even");
    return {FiberKind::I, n, a};
}

FiberType fiber_IStar(int n, Action a) {
    if (n < 0) throw Error(errkind::InvalidParameter, "I_n^* needs n >= 0");
    if (a == Action::None) throw Error(errkind::InvalidParameter, "I_n^* carries an action tag");
    if (n % 2 != 0 && a == Action::II)
        throw Error(errkind::InvalidParameter, "I_n^* of type (ii) needs n even");
    if (n == 0) a = Action::I;  // the two actions coincide on I_0^*
    return {FiberKind::IStar, n, a};
}

FiberType fiber_III() { return {FiberKind::III, 0, Action::None}; }
FiberType fiber_IIIStar() { return {FiberKind::IIIStar, 0, Action::None}; }
FiberType fiber_regular() { return {FiberKind::Regular, 0, Action::None}; }

FiberInvariants fiber_invariants(FiberType f) {
    FiberInvariants inv;
    switch (f.kind) {
        case FiberKind::Regular:
            throw Error(errkind::RegularFiber, "smooth fibers have no invariants row");
        case FiberKind::I: {
            int n = f.n;
            inv.root_lattice = {RootLatticeRef::Family::A, n - 1};
            inv.ord_delta = n;
            inv.m = n;
            inv.m1 = n;
            inv.n_fixed = (f.action == Action::I) ? n : 0;
            return inv;
        }
        case FiberKind::IStar: {
            int n = f.n;
            inv.root_lattice = {RootLatticeRef::Family::D, n + 4};
            inv.ord_delta = n + 6;
            inv.m = n + 5;
            inv.m1 = 4;
            if (n % 2 == 0)
                inv.n_fixed = (f.action == Action::I) ? n + 2 : 2;
            else
                inv.n_fixed = n + 2;
            return inv;
        }
        case FiberKind::III:
            inv.root_lattice = {RootLatticeRef::Family::A, 1};
            inv.ord_delta = 3;
            inv.m = 2;
            inv.m1 = 2;
            inv.n_fixed = 1;
            return inv;
        case FiberKind::IIIStar:
            inv.root_lattice = {RootLatticeRef::Family::E7, 7};
            inv.ord_delta = 9;
            inv.m = 8;
            inv.m1 = 2;
            inv.n_fixed = 3;
            return inv;
    }
    throw Error(errkind::NotInTable, "unreachable fiber kind");
}

std::pair<int, int> fiber_valuations(FiberType f) {
    switch (f.kind) {
        case FiberKind::Regular: return {0, 0};
        case FiberKind::I:
            return (f.action == Action::I) ? std::pair{0, f.n} : std::pair{f.n / 2, 0};
        case FiberKind::IStar:
            if (f.n % 2 != 0) return {2, f.n + 2};
            return (f.action == Action::I) ? std::pair{2, f.n + 2} : std::pair{f.n / 2 + 2, 2};
        case FiberKind::III: return {1, 1};
        case FiberKind::IIIStar: return {3, 3};
    }
    throw Error(errkind::NotInTable, "unreachable fiber kind");
}

int quotient_ord_delta(FiberType f) {
    auto [vb, vc] = fiber_valuations(f);
    return vb + 2 * vc;  // v_b and v_c swap on the quotient
}

FiberType classify_from_valuations(int v_a, int v_b, int v_c) {
    if (v_b < 0 || v_c < 0 || (v_a < 0 && v_a != kValInfinity))
        throw Error(errkind::BadInput, "negative valuation");
    if ((v_a == kValInfinity || v_a >= 2) && v_b >= 4)
        throw Error(errkind::NonMinimalModel,
                    "weight-(2,4) rescaling applies: v_a >= 2, v_b >= 4");

    if (v_b == 0 && v_c == 0) return fiber_regular();
    if (v_b == 0) return fiber_I(v_c, Action::I);
    if (v_c == 0) return fiber_I(2 * v_b, Action::II);
    if (v_b == 1 && v_c == 1) return fiber_III();
    if (v_b == 3 && v_c == 3) return fiber_IIIStar();
    if (v_b == 2 && v_c >= 2) {
        // I*_{v_c - 2}; odd star index has a single involution class.
        int n = v_c - 2;
        return fiber_IStar(n, Action::I);
    }
    if (v_c == 2 && v_b >= 3) return fiber_IStar(2 * (v_b - 2), Action::II);
    throw Error(errkind::NotInTable,
                "valuation pair (v_b, v_c) = (" + std::to_string(v_b) + ", " +
                    std::to_string(v_c) + ") has no table row");
}

FiberType quotient_fiber(FiberType f) {
    switch (f.kind) {
        case FiberKind::Regular: return f;
        case FiberKind::I:
            if (f.action == Action::I) return fiber_I(2 * f.n, Action::II);
            return fiber_I(f.n / 2, Action::I);
        case FiberKind::IStar:
            if (f.n % 2 != 0) return fiber_IStar(2 * f.n, Action::II);
            if (f.action == Action::I) return fiber_IStar(2 * f.n, Action::II);
            return fiber_IStar(f.n / 2, Action::I);
        case FiberKind::III: return f;
        case FiberKind::IIIStar: return f;
    }
    throw Error(errkind::NotInTable, "unreachable fiber kind");
}

bool torsion_embeds(FiberType f, TorsionShape g) {
    switch (f.kind) {
        case FiberKind::Regular:
            return true;  // C^2/lattice contains every finite abelian group of rank <= 2
        case FiberKind::I:
            // C^* x Z/n
            switch (g) {
                case TorsionShape::Z2:
                case TorsionShape::Z4:
                case TorsionShape::Z8:
                case TorsionShape::Z16: return true;
                case TorsionShape::Z2xZ2:
                case TorsionShape::Z4xZ2: return f.n % 2 == 0;
                case TorsionShape::Z2xZ2xZ2: return false;
            }
            break;
        case FiberKind::IStar:
            if (f.n % 2 == 0) {
                // C x (Z/2)^2
                return g == TorsionShape::Z2 || g == TorsionShape::Z2xZ2;
            }
            // C x Z/4
            return g == TorsionShape::Z2 || g == TorsionShape::Z4;
        case FiberKind::III:
        case FiberKind::IIIStar:
            // C x Z/2
            return g == TorsionShape::Z2;
    }
    return false;
}

std::string fiber_str(FiberType f) {
    std::ostringstream os;
    switch (f.kind) {
        case FiberKind::Regular: return "reg";
        case FiberKind::III: return "III";
        case FiberKind::IIIStar: return "III*";
        case FiberKind::I: os << "I" << f.n; break;
        case FiberKind::IStar: os << "I*" << f.n; break;
    }
    os << (f.action == Action::I ? "(i)" : "(ii)");
    return os.str();
}

FiberType parse_fiber(const std::string& s) {
    if (s == "reg") return fiber_regular();
    if (s == "III") return fiber_III();
    if (s == "III*") return fiber_IIIStar();
    bool star = false;
    size_t pos = 0;
    if (s.empty() || s[0] != 'I') throw Error(errkind::BadInput, "bad fiber string '" + s + "'");
    pos = 1;
    if (pos < s.size() && s[pos] == '*') {
        star = true;
        ++pos;
    }
    size_t digits = pos;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    if (digits == pos) throw Error(errkind::BadInput, "bad fiber string '" + s + "'");
    int n = std::stoi(s.substr(pos, digits - pos));
    std::string tag = s.substr(digits);
    Action a;
    if (tag == "(i)")
        a = Action::I;
    else if (tag == "(ii)")
        a = Action::II;
    else
        throw Error(errkind::BadInput, "bad fiber action tag in '" + s + "'");
    return star ? fiber_IStar(n, a) : fiber_I(n, a);
}

bool fiber_less(FiberType a, FiberType b) {
    auto rank = [](FiberKind k) {
        switch (k) {
            case FiberKind::I: return 0;
            case FiberKind::IStar: return 1;
            case FiberKind::III: return 2;
            case FiberKind::IIIStar: return 3;
            case FiberKind::Regular: return 4;
        }
        return 5;
    };
    if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind);
    if (a.n != b.n) return a.n < b.n;
    return static_cast<int>(a.action) < static_cast<int>(b.action);
}

void Configuration::add(FiberType f, int count, std::string place) {
    if (count <= 0) throw Error(errkind::InvalidParameter, "fiber count must be positive");
    entries.push_back({f, count, std::move(place)});
}

void Configuration::canonicalize() {
    std::sort(entries.begin(), entries.end(), [](const ConfigEntry& x, const ConfigEntry& y) {
        if (x.fiber != y.fiber) return fiber_less(x.fiber, y.fiber);
        return x.place < y.place;
    });
    std::vector<ConfigEntry> merged;
    for (auto& e : entries) {
        if (!merged.empty() && merged.back().fiber == e.fiber && merged.back().place.empty() &&
            e.place.empty())
            merged.back().count += e.count;
        else
            merged.push_back(e);
    }
    entries = std::move(merged);
}

int Configuration::sum_m_minus_1() const {
    int s = 0;
    for (const auto& e : entries) s += e.count * (fiber_invariants(e.fiber).m - 1);
    return s;
}

int Configuration::sum_n_fixed() const {
    int s = 0;
    for (const auto& e : entries) s += e.count * fiber_invariants(e.fiber).n_fixed;
    return s;
}

int Configuration::sum_ord_delta() const {
    int s = 0;
    for (const auto& e : entries) s += e.count * fiber_invariants(e.fiber).ord_delta;
    return s;
}

int Configuration::sum_quotient_ord_delta() const {
    int s = 0;
    for (const auto& e : entries) s += e.count * quotient_ord_delta(e.fiber);
    return s;
}

Integer Configuration::prod_m1() const {
    Integer p = 1;
    for (const auto& e : entries)
        for (int i = 0; i < e.count; ++i) p *= fiber_invariants(e.fiber).m1;
    return p;
}

int Configuration::fiber_count() const {
    int s = 0;
    for (const auto& e : entries) s += e.count;
    return s;
}

bool Configuration::same_fibers(const Configuration& other) const {
    std::map<std::string, int> a, b;
    for (const auto& e : entries) a[fiber_str(e.fiber)] += e.count;
    for (const auto& e : other.entries) b[fiber_str(e.fiber)] += e.count;
    return a == b;
}

std::string Configuration::str() const {
    Configuration c = *this;
    for (auto& e : c.entries) e.place.clear();
    c.canonicalize();
    std::ostringstream os;
    bool first = true;
    for (const auto& e : c.entries) {
        if (!first) os << " + ";
        if (e.count > 1) os << e.count;
        os << fiber_str(e.fiber);
        first = false;
    }
    return first ? "(none)" : os.str();
}

Configuration quotient_configuration(const Configuration& cfg) {
    Configuration out;
    for (const auto& e : cfg.entries) out.add(quotient_fiber(e.fiber), e.count, e.place);
    return out;
}

}  // namespace elk3
