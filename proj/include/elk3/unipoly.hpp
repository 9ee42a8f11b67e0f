#ifndef ELK3_UNIPOLY_HPP
#define ELK3_UNIPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elk3/rational.hpp"

namespace elk3 {

// Univariate polynomial over Q in the variable t, dense coefficients in
// ascending degree, no trailing zeros.  The zero polynomial has an empty
// coefficient vector and no degree; degree() throws instead of returning a
// sentinel that could leak into valuation arithmetic.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& c);
    static UniPoly t();                       // the monomial t
    static UniPoly monomial(int deg, const Rational& c);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const;                       // throws ZeroPolynomial on 0
    const Rational& lc() const;               // leading coefficient
    Rational coeff(int k) const;              // 0 outside range
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& g);
    UniPoly& operator-=(const UniPoly& g);
    UniPoly& operator*=(const UniPoly& g);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly f, const UniPoly& g) { return f += g; }
    friend UniPoly operator-(UniPoly f, const UniPoly& g) { return f -= g; }
    friend UniPoly operator*(UniPoly f, const UniPoly& g) { return f *= g; }
    friend UniPoly operator*(UniPoly f, const Rational& s) { return f *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly f) { return f *= s; }

    bool operator==(const UniPoly& g) const { return c_ == g.c_; }
    bool operator!=(const UniPoly& g) const { return !(*this == g); }

    UniPoly derivative() const;
    UniPoly monic() const;                    // throws ZeroPolynomial on 0
    UniPoly pow(unsigned e) const;

    // s^w * f(1/s) as a polynomial in s; requires deg f <= w.
    UniPoly reverse_weighted(int w) const;

    // Human-readable form, e.g. "t^3 - 1/2*t + 1".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder with f = q*g + r, deg r < deg g.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g);

// Exact quotient; throws BadInput if g does not divide f.
UniPoly exact_div(const UniPoly& f, const UniPoly& g);

bool divides(const UniPoly& g, const UniPoly& f);

// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

// Yun decomposition: f = lc(f) * prod g_i^{m_i} with the g_i monic,
// squarefree, pairwise coprime, and the m_i strictly increasing.
struct SquarefreePart {
    UniPoly factor;
    int multiplicity;
};
std::vector<SquarefreePart> squarefree_decompose(const UniPoly& f);

// Product of the distinct monic irreducible factors.
UniPoly radical(const UniPoly& f);

bool is_squarefree(const UniPoly& f);

// Exact square root over Q[t] if one exists.
std::optional<UniPoly> is_square_rational(const UniPoly& f);

// Square over C[t]: every root multiplicity even.  Throws ZeroPolynomial.
bool is_square_geometric(const UniPoly& f);

// Multiplicity of g (squarefree) in f, i.e. the largest k with g^k | f.
int valuation_at(const UniPoly& f, const UniPoly& g);

}  // namespace elk3

#endif
