#ifndef ELK3_REPORT_HPP
#define ELK3_REPORT_HPP

#include <json.hpp>

#include "elk3/families.hpp"
#include "elk3/lattice.hpp"
#include "elk3/quadform.hpp"
#include "elk3/surface.hpp"
#include "elk3/theorem.hpp"

namespace elk3 {

using Json = nlohmann::ordered_json;

// Polynomials serialize as arrays of "num/den" strings in ascending degree.
Json poly_to_json(const UniPoly& f);
UniPoly poly_from_json(const Json& j);

// Surface files: { "a": [...], "b": [...] }.
Json surface_to_json(const TwoTorsionSurface& s);
TwoTorsionSurface surface_from_json(const Json& j);

// Gram matrices: integer arrays of arrays.
IntLattice lattice_from_json(const Json& j);
Json quadform_to_json(const FiniteQuadForm& F);

struct SurfaceReport {
    std::vector<SurfacePlace> places;
    Configuration configuration;
    int mw_rank = 0;
    int picard = 0;
    TorsionInfo torsion;
    Integer det;
    int fixed_point_total = 0;
    int euler_total = 0;
    std::vector<std::string> notes;
};

SurfaceReport surface_report(const TwoTorsionSurface& s, int mw_rank = 0);
Json report_to_json(const SurfaceReport& r);
std::string report_to_text(const SurfaceReport& r);

Json lattice_report(const IntLattice& L);
std::string lattice_report_text(const Json& j);

Json theorem_search_report(const SearchConstraints& c);
std::string theorem_search_text(const Json& j);

Json isogeny_check_report(const TwoTorsionSurface& s, const std::vector<Rational>& t0s);
std::string isogeny_check_text(const Json& j);

// Fiber tables and determinant/divisor values of the X_d, Y_d and X'_n
// families at the committed sample parameters.
Json paper_tables_report();
std::string paper_tables_text(const Json& j);

// Deterministic search for a rational point with small x on the fiber at
// t0; returns an affine point or nothing.
std::optional<AffinePoint> find_rational_point(const SpecializedCurve& c);

}  // namespace elk3

#endif
