#ifndef ELK3_KODAIRA_HPP
#define ELK3_KODAIRA_HPP

#include <string>
#include <vector>

#include "elk3/error.hpp"
#include "elk3/rational.hpp"

namespace elk3 {

enum class FiberKind { Regular, I, IStar, III, IIIStar };

// How the translation-by-2-torsion involution acts on the fiber: (i) fixes
// points on each component, (ii) rotates the component diagram.  III, III*
// and smooth fibers carry no tag.
enum class Action { None, I, II };

struct FiberType {
    FiberKind kind = FiberKind::Regular;
    int n = 0;           // I_n / I_n^*; 0 otherwise
    Action action = Action::None;

    bool operator==(const FiberType&) const = default;
};

// Validating constructors.  I(n, ii) and IStar(n, ii) require n even;
// IStar(0) has a single involution class and is normalized to tag (i).
FiberType fiber_I(int n, Action a);
FiberType fiber_IStar(int n, Action a);
FiberType fiber_III();
FiberType fiber_IIIStar();
FiberType fiber_regular();

struct RootLatticeRef {
    enum class Family { None, A, D, E7 } family = Family::None;
    int n = 0;  // index within the family
};

struct FiberInvariants {
    RootLatticeRef root_lattice;
    int ord_delta = 0;   // multiplicity of the discriminant
    int m = 1;           // number of components
    int m1 = 1;          // number of simple components
    int n_fixed = 0;     // fixed points of the involution on this fiber
};

// Invariant table; throws RegularFiber for the smooth fiber.
FiberInvariants fiber_invariants(FiberType f);

// (v_b, v_c) of the canonical valuation pattern realizing f.
std::pair<int, int> fiber_valuations(FiberType f);

// ord of the quotient surface's discriminant at the same place.
int quotient_ord_delta(FiberType f);

// Classification from valuations of b and c = a^2 - 4b at a place; v_a
// enters only through the minimality test (v_a >= 2 and v_b >= 4 is the
// weight-(2,4) reducible pattern).  Throws NotInTable or NonMinimalModel.
FiberType classify_from_valuations(int v_a, int v_b, int v_c);

// Image fiber on the quotient surface, per the table row.
FiberType quotient_fiber(FiberType f);

// Torsion groups that can appear in the Mordell-Weil group of these
// surfaces, for the specialization-injectivity test.
enum class TorsionShape { Z2, Z4, Z2xZ2, Z8, Z4xZ2, Z2xZ2xZ2, Z16 };

// Whether the torsion group injects into the group of simple points of f.
bool torsion_embeds(FiberType f, TorsionShape g);

std::string fiber_str(FiberType f);
FiberType parse_fiber(const std::string& s);

// Total order used everywhere a configuration is canonicalized.
bool fiber_less(FiberType a, FiberType b);

struct ConfigEntry {
    FiberType fiber;
    int count = 1;
    std::string place;  // optional cluster modulus or "inf"
};

// Multiset of singular fibers, optionally tagged with places.
struct Configuration {
    std::vector<ConfigEntry> entries;

    void add(FiberType f, int count = 1, std::string place = "");
    void canonicalize();  // sort by fiber order, merge equal unplaced fibers

    int sum_m_minus_1() const;
    int sum_n_fixed() const;
    int sum_ord_delta() const;
    int sum_quotient_ord_delta() const;
    Integer prod_m1() const;
    int fiber_count() const;  // total multiplicity

    // Multiset equality on (fiber, count), ignoring place labels.
    bool same_fibers(const Configuration& other) const;

    // Compact form such as "6I1(i) + I2(i) + I6(ii) + I10(ii)".
    std::string str() const;
};

Configuration quotient_configuration(const Configuration& cfg);

}  // namespace elk3

#endif
