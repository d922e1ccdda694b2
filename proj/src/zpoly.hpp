#ifndef PVG_SRC_ZPOLY_HPP
#define PVG_SRC_ZPOLY_HPP

#include <vector>

#include "pvg/errors.hpp"
#include "pvg/poly.hpp"
#include "pvg/rational.hpp"

namespace pvg::detail {

// Internal dense polynomial over Z, used by gcd and factorization. The zero
// polynomial is the empty vector; otherwise the top coefficient is non-zero.
struct ZPoly {
    std::vector<Integer> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) { trim(); }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Integer& lc() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    Integer coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return Integer(0);
        return c[i];
    }
};

inline ZPoly z_add(const ZPoly& a, const ZPoly& b) {
    std::vector<Integer> r(std::max(a.c.size(), b.c.size()), Integer(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return ZPoly(std::move(r));
}

inline ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    std::vector<Integer> r(std::max(a.c.size(), b.c.size()), Integer(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return ZPoly(std::move(r));
}

inline ZPoly z_neg(const ZPoly& a) {
    ZPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Integer> r(a.c.size() + b.c.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] += a.c[i] * b.c[j];
    return ZPoly(std::move(r));
}

inline ZPoly z_scale(const ZPoly& a, const Integer& k) {
    if (k == 0) return ZPoly();
    ZPoly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

// Exact scalar division; every coefficient must be divisible by k.
inline ZPoly z_scale_div(const ZPoly& a, const Integer& k) {
    if (k == 0) throw ZeroInput("division by zero");
    ZPoly r = a;
    for (auto& x : r.c) {
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
        if (rem != 0) throw InternalError("inexact integer polynomial division");
        x = q;
    }
    return r;
}

// Non-negative gcd of all coefficients; content of the zero polynomial is 0.
inline Integer z_content(const ZPoly& a) {
    Integer g(0);
    for (const auto& x : a.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Primitive part with positive leading coefficient; zero maps to zero.
inline ZPoly z_primitive(const ZPoly& a) {
    if (a.is_zero()) return a;
    Integer g = z_content(a);
    if (a.lc() < 0) g = -g;
    return z_scale_div(a, g);
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
inline ZPoly z_prem(ZPoly a, const ZPoly& b) {
    if (b.is_zero()) throw ZeroInput("pseudo-remainder by zero");
    const int db = b.deg();
    int e = a.deg() - db + 1;
    if (e < 0) return a;
    const Integer& d = b.lc();
    while (!a.is_zero() && a.deg() >= db) {
        ZPoly shifted;
        shifted.c.assign(static_cast<std::size_t>(a.deg() - db), Integer(0));
        Integer top = a.lc();
        for (const auto& x : b.c) shifted.c.push_back(x * top);
        a = z_sub(z_scale(a, d), shifted);
        --e;
    }
    while (e-- > 0) a = z_scale(a, d);
    return a;
}

// Division over Z by a monic divisor.
inline void z_divrem_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
    if (b.is_zero() || b.lc() != 1) throw InternalError("divisor must be monic");
    r = a;
    q = ZPoly();
    const int db = b.deg();
    if (a.deg() >= db)
        q.c.assign(static_cast<std::size_t>(a.deg() - db + 1), Integer(0));
    while (!r.is_zero() && r.deg() >= db) {
        const int k = r.deg() - db;
        Integer top = r.lc();
        q.c[static_cast<std::size_t>(k)] = top;
        for (int i = 0; i <= db; ++i)
            r.c[static_cast<std::size_t>(k + i)] -= top * b.c[static_cast<std::size_t>(i)];
        r.trim();
    }
    q.trim();
}

inline Integer z_max_norm(const ZPoly& a) {
    Integer m(0);
    for (const auto& x : a.c) {
        Integer ax = abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

// Clears denominators: p == (num / den) as polynomials, num primitive with
// positive leading coefficient (for non-zero p).
struct ZFromQ {
    ZPoly num;
    Rational scale;   // p == scale * num
};

inline ZFromQ z_from_poly(const Poly& p) {
    if (p.is_zero()) return {ZPoly(), Rational(0)};
    Integer d(1);
    for (const auto& q : p.coeffs())
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.den().get_mpz_t());
    ZPoly raw;
    raw.c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs())
        raw.c.push_back(q.num() * (d / q.den()));
    raw.trim();
    Integer g = z_content(raw);
    if (raw.lc() < 0) g = -g;
    return {z_scale_div(raw, g), Rational(g, d)};
}

inline Poly z_to_poly(const ZPoly& a) {
    std::vector<Rational> c;
    c.reserve(a.c.size());
    for (const auto& x : a.c) c.emplace_back(x);
    return Poly(std::move(c));
}

} // namespace pvg::detail

#endif
