#include "elk3/qdivisor.hpp"

#include "elk3/error.hpp"

namespace elk3 {

QDivisor make_qdivisor(IntLattice L, RatVector coords) {
    if (static_cast<int>(coords.size()) != L.rank())
        throw Error(errkind::BadInput, "coordinate length != lattice rank");
    return {std::move(L), std::move(coords)};
}

Rational qdiv_inner(const QDivisor& u, const QDivisor& v) {
    if (u.lattice.gram != v.lattice.gram)
        throw Error(errkind::LatticeMismatch, "divisors live in different lattices");
    Rational acc(0);
    int n = u.lattice.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc += u.coords[i] * Rational(u.lattice.gram[i][j]) * v.coords[j];
    return acc;
}

Integer qdiv_order_mod_lattice(const QDivisor& v) {
    Integer m = 1;
    for (const auto& c : v.coords) m = lcm(m, c.get_den());
    return m;
}

bool qdiv_in_dual(const QDivisor& v) {
    int n = v.lattice.rank();
    for (int i = 0; i < n; ++i) {
        Rational acc(0);
        for (int j = 0; j < n; ++j) acc += Rational(v.lattice.gram[i][j]) * v.coords[j];
        if (!is_integer(acc)) return false;
    }
    return true;
}

QDivisor theta_divisor(int m) {
    if (m < 1)
        throw Error(errkind::WrongFiberKind, "theta_{2m} needs an I_{2m} fiber of type (ii)");
    int rank = 2 * m - 1;
    RatVector coords(static_cast<size_t>(rank));
    for (int k = 1; k <= rank; ++k) coords[static_cast<size_t>(k - 1)] = make_rational(k, 2 * m);
    return make_qdivisor(lattice_A(rank), std::move(coords));
}

QDivisor gamma_xd(int d) {
    if (d < 1 || d > 6) throw Error(errkind::InvalidParameter, "gamma_xd needs 1 <= d <= 6");
    int a_rank = 2 * d - 1;
    int d_rank = 16 - 2 * d;
    IntLattice amb = direct_sum(lattice_A(a_rank), lattice_D(d_rank));
    RatVector coords(static_cast<size_t>(a_rank + d_rank), Rational(0));
    for (int k = 1; k <= a_rank; ++k) coords[static_cast<size_t>(k - 1)] = make_rational(k, 2 * d);
    // The two fork nodes of the D block are its last two basis vectors.
    coords[static_cast<size_t>(a_rank + d_rank - 2)] = Rational(1, 2);
    coords[static_cast<size_t>(a_rank + d_rank - 1)] = Rational(1, 2);
    return make_qdivisor(std::move(amb), std::move(coords));
}

QDivisor gamma_xprime(int n) {
    if (n != 5 && n != 7) throw Error(errkind::InvalidParameter, "gamma_xprime needs n in {5, 7}");
    int r1 = 2 * n - 1;
    int r2 = 15 - 2 * n;
    IntLattice amb = direct_sum(direct_sum(lattice_A(r1), lattice_A(r2)), lattice_A(1));
    RatVector coords(static_cast<size_t>(r1 + r2 + 1), Rational(0));
    for (int k = 1; k <= r1; ++k) coords[static_cast<size_t>(k - 1)] = make_rational(k, 2 * n);
    for (int k = 1; k <= r2; ++k)
        coords[static_cast<size_t>(r1 + k - 1)] = make_rational(k, 16 - 2 * n);
    coords[static_cast<size_t>(r1 + r2)] = Rational(1, 2);
    return make_qdivisor(std::move(amb), std::move(coords));
}

}  // namespace elk3
