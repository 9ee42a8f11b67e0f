#ifndef ELK3_ERROR_HPP
#define ELK3_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace elk3 {

// Domain error with a stable machine-readable kind and, where it makes
// sense, the place (cluster modulus or "inf") that triggered it.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg, std::string place = "")
        : std::runtime_error(kind + ": " + msg),
          kind_(std::move(kind)),
          place_(std::move(place)) {}

    const std::string& kind() const { return kind_; }
    const std::string& place() const { return place_; }

private:
    std::string kind_;
    std::string place_;
};

namespace errkind {
inline constexpr const char* ZeroPolynomial = "ZeroPolynomial";
inline constexpr const char* DegreeBoundViolated = "DegreeBoundViolated";
inline constexpr const char* NotInTable = "NotInTable";
inline constexpr const char* NonMinimalModel = "NonMinimalModel";
inline constexpr const char* RegularFiber = "RegularFiber";
inline constexpr const char* SingularSurface = "SingularSurface";
inline constexpr const char* SingularFiber = "SingularFiber";
inline constexpr const char* OffCurve = "OffCurve";
inline constexpr const char* InvalidParameter = "InvalidParameter";
inline constexpr const char* DegenerateLattice = "DegenerateLattice";
inline constexpr const char* LatticeMismatch = "LatticeMismatch";
inline constexpr const char* WrongFiberKind = "WrongFiberKind";
inline constexpr const char* NonIntegralDeterminant = "NonIntegralDeterminant";
inline constexpr const char* NotAdmissible = "NotAdmissible";
inline constexpr const char* InvalidFamilyParameter = "InvalidFamilyParameter";
inline constexpr const char* BadInput = "BadInput";
}  // namespace errkind

}  // namespace elk3

#endif
