#include "elk3/unipoly.hpp"

#include <sstream>

namespace elk3 {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly f;
    if (c != 0) f.c_ = {c};
    return f;
}

UniPoly UniPoly::t() { return monomial(1, 1); }

UniPoly UniPoly::monomial(int deg, const Rational& c) {
    UniPoly f;
    if (c != 0) {
        f.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
        f.c_.back() = c;
    }
    return f;
}

int UniPoly::degree() const {
    if (c_.empty())
        throw Error(errkind::ZeroPolynomial, "degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

const Rational& UniPoly::lc() const {
    if (c_.empty())
        throw Error(errkind::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return c_.back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly f(*this);
    for (auto& c : f.c_) c = -c;
    return f;
}

UniPoly& UniPoly::operator+=(const UniPoly& g) {
    if (c_.size() < g.c_.size()) c_.resize(g.c_.size(), Rational(0));
    for (size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& g) {
    if (c_.size() < g.c_.size()) c_.resize(g.c_.size(), Rational(0));
    for (size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& g) {
    if (is_zero() || g.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + g.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < g.c_.size(); ++j) out[i + j] += c_[i] * g.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    UniPoly f(*this);
    const Rational& l = lc();
    for (auto& c : f.c_) c /= l;
    return f;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc = UniPoly::constant(1);
    UniPoly base(*this);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

UniPoly UniPoly::reverse_weighted(int w) const {
    if (is_zero()) return UniPoly();
    if (degree() > w)
        throw Error(errkind::DegreeBoundViolated,
                    "degree " + std::to_string(degree()) + " exceeds weight " + std::to_string(w));
    std::vector<Rational> out(static_cast<size_t>(w) + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[static_cast<size_t>(w) - i] = c_[i];
    return UniPoly(std::move(out));
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || k == 0) {
            os << a.get_str();
            if (k > 0) os << "*";
        }
        if (k == 1)
            os << "t";
        else if (k > 1)
            os << "t^" << k;
        first = false;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw Error(errkind::ZeroPolynomial, "division by the zero polynomial");
    if (f.is_zero() || f.degree() < g.degree()) return {UniPoly(), f};
    std::vector<Rational> r = f.coeffs();
    int dg = g.degree();
    const Rational& lg = g.lc();
    std::vector<Rational> q(r.size() - static_cast<size_t>(dg), Rational(0));
    for (int k = static_cast<int>(r.size()) - 1; k >= dg; --k) {
        Rational c = r[static_cast<size_t>(k)] / lg;
        if (c == 0) continue;
        q[static_cast<size_t>(k - dg)] = c;
        for (int j = 0; j <= dg; ++j) r[static_cast<size_t>(k - dg + j)] -= c * g.coeff(j);
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero())
        throw Error(errkind::BadInput, "inexact polynomial division");
    return q;
}

bool divides(const UniPoly& g, const UniPoly& f) {
    if (g.is_zero()) return f.is_zero();
    return divrem(f, g).second.is_zero();
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    UniPoly a = f, b = g;
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

std::vector<SquarefreePart> squarefree_decompose(const UniPoly& f) {
    if (f.is_zero())
        throw Error(errkind::ZeroPolynomial, "squarefree decomposition of the zero polynomial");
    std::vector<SquarefreePart> out;
    if (f.degree() == 0) return out;

    // Yun: g_k collects the monic factors of multiplicity exactly k.
    UniPoly fp = f.derivative();
    UniPoly c = poly_gcd(f, fp);
    UniPoly w = exact_div(f, c);
    UniPoly y = exact_div(fp, c);
    int k = 1;
    while (w.degree() > 0) {
        UniPoly z = y - w.derivative();
        UniPoly g = poly_gcd(w, z);
        if (g.degree() > 0) out.push_back({g, k});
        w = exact_div(w, g);
        y = exact_div(z, g);
        ++k;
    }
    return out;
}

UniPoly radical(const UniPoly& f) {
    UniPoly out = UniPoly::constant(1);
    for (const auto& part : squarefree_decompose(f)) out *= part.factor;
    return out;
}

bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) throw Error(errkind::ZeroPolynomial, "squarefree test of the zero polynomial");
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

std::optional<UniPoly> is_square_rational(const UniPoly& f) {
    if (f.is_zero()) return UniPoly();
    int n = f.degree();
    if (n % 2 != 0) return std::nullopt;
    auto slc = rational_sqrt_exact(f.lc());
    if (!slc) return std::nullopt;
    int m = n / 2;
    // Solve the top coefficients of s from the top of s^2 downward; the
    // final product check validates the lower half.
    std::vector<Rational> s(static_cast<size_t>(m) + 1, Rational(0));
    s[static_cast<size_t>(m)] = *slc;
    for (int k = m - 1; k >= 0; --k) {
        // [t^{k+m}](s^2) = 2 s_m s_k + sum over k < i <= j < m with i+j = k+m
        Rational acc(0);
        for (int i = k + 1; i <= m - 1; ++i) {
            int j = k + m - i;
            if (i > j) break;
            if (i == j)
                acc += s[static_cast<size_t>(i)] * s[static_cast<size_t>(i)];
            else
                acc += 2 * s[static_cast<size_t>(i)] * s[static_cast<size_t>(j)];
        }
        s[static_cast<size_t>(k)] = (f.coeff(k + m) - acc) / (2 * (*slc));
    }
    UniPoly cand{std::vector<Rational>(s)};
    if (cand * cand == f) return cand;
    return std::nullopt;
}

bool is_square_geometric(const UniPoly& f) {
    if (f.is_zero())
        throw Error(errkind::ZeroPolynomial, "geometric square test of the zero polynomial");
    for (const auto& part : squarefree_decompose(f))
        if (part.multiplicity % 2 != 0) return false;
    return true;
}

int valuation_at(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero()) throw Error(errkind::ZeroPolynomial, "valuation of the zero polynomial");
    if (g.is_zero() || g.degree() < 1)
        throw Error(errkind::BadInput, "valuation requires a nonconstant modulus");
    int v = 0;
    UniPoly cur = f;
    while (true) {
        auto [q, r] = divrem(cur, g);
        if (!r.is_zero()) return v;
        cur = std::move(q);
        ++v;
    }
}

}  // namespace elk3
