#ifndef ELK3_RATIONAL_HPP
#define ELK3_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "elk3/error.hpp"

namespace elk3 {

// Exact arithmetic is GMP throughout.  mpq_class keeps gcd(|num|, den) = 1
// and den >= 1 after every arithmetic operation, which is exactly the
// normal form the rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n", "-n", "n/d"; throws BadInput on anything else.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error(errkind::BadInput, "empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw Error(errkind::BadInput, "cannot parse rational '" + s + "'");
    if (r.get_den() == 0)
        throw Error(errkind::BadInput, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

// sqrt in Q if it exists: both numerator and denominator must be squares.
inline std::optional<Rational> rational_sqrt_exact(const Rational& r) {
    auto num = integer_sqrt_exact(r.get_num());
    if (!num) return std::nullopt;
    auto den = integer_sqrt_exact(r.get_den());
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

// Value of x in Q/2Z represented in [0, 2).
inline Rational mod_two(const Rational& x) {
    Integer twice_den = 2 * x.get_den();
    Integer num = x.get_num();
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
    Rational out(m, x.get_den());
    out.canonicalize();
    return out;
}

// Value of x in Q/Z represented in [0, 1).
inline Rational mod_one(const Rational& x) {
    Integer num = x.get_num();
    Integer den = x.get_den();
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rational out(m, den);
    out.canonicalize();
    return out;
}

}  // namespace elk3

#endif
