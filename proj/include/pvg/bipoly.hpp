#ifndef PVG_BIPOLY_HPP
#define PVG_BIPOLY_HPP

#include <vector>

#include "pvg/errors.hpp"
#include "pvg/poly.hpp"
#include "pvg/rational.hpp"

namespace pvg {

// Coefficient-ring operations used by the generic resultant. Instantiated
// for Rational and for Poly (polynomials in a second variable).
template <class C>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingOps<Poly> {
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    static bool is_zero(const Poly& x) { return x.is_zero(); }
    static Poly exact_div(const Poly& a, const Poly& b) { return Poly::exact_div(a, b); }
};

// Dense polynomial with coefficients in C; index = degree in the outer
// variable. Only what the resultant needs.
template <class C>
struct PolyOf {
    std::vector<C> c;

    PolyOf() = default;
    explicit PolyOf(std::vector<C> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && RingOps<C>::is_zero(c.back())) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const C& lc() const { return c.back(); }
};

template <class C>
PolyOf<C> bipoly_add(const PolyOf<C>& a, const PolyOf<C>& b) {
    std::vector<C> r(std::max(a.c.size(), b.c.size()), RingOps<C>::zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return PolyOf<C>(std::move(r));
}

template <class C>
PolyOf<C> bipoly_mul(const PolyOf<C>& a, const PolyOf<C>& b) {
    if (a.is_zero() || b.is_zero()) return PolyOf<C>();
    std::vector<C> r(a.c.size() + b.c.size() - 1, RingOps<C>::zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return PolyOf<C>(std::move(r));
}

template <class C>
PolyOf<C> bipoly_sub(const PolyOf<C>& a, const PolyOf<C>& b) {
    std::vector<C> r(std::max(a.c.size(), b.c.size()), RingOps<C>::zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return PolyOf<C>(std::move(r));
}

template <class C>
PolyOf<C> bipoly_scale(const PolyOf<C>& a, const C& k) {
    if (RingOps<C>::is_zero(k)) return PolyOf<C>();
    PolyOf<C> r = a;
    for (auto& x : r.c) x = x * k;
    r.trim();
    return r;
}

template <class C>
PolyOf<C> bipoly_scale_exact_div(const PolyOf<C>& a, const C& k) {
    PolyOf<C> r = a;
    for (auto& x : r.c) x = RingOps<C>::exact_div(x, k);
    return r;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
template <class C>
PolyOf<C> bipoly_prem(PolyOf<C> a, const PolyOf<C>& b) {
    const int db = b.deg();
    int e = a.deg() - db + 1;
    if (e < 0) return a;
    const C d = b.lc();
    while (!a.is_zero() && a.deg() >= db) {
        PolyOf<C> shifted;
        shifted.c.assign(static_cast<std::size_t>(a.deg() - db), RingOps<C>::zero());
        C top = a.lc();
        for (const auto& x : b.c) shifted.c.push_back(x * top);
        a = bipoly_sub(bipoly_scale(a, d), shifted);
        --e;
    }
    while (e-- > 0) a = bipoly_scale(a, d);
    return a;
}

// Resultant of two non-zero polynomials by the subresultant remainder
// sequence; all interior divisions are exact in C. Throws ZeroPolynomial on
// zero input.
template <class C>
C resultant(PolyOf<C> a, PolyOf<C> b) {
    if (a.is_zero() || b.is_zero()) throw ZeroPolynomial();
    bool negate = false;
    if (a.deg() < b.deg()) {
        if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
        std::swap(a, b);
    }
    C g = RingOps<C>::one();
    C h = RingOps<C>::one();
    while (b.deg() > 0) {
        const int delta = a.deg() - b.deg();
        if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
        PolyOf<C> r = bipoly_prem(a, b);
        a = std::move(b);
        C div = g;
        for (int i = 0; i < delta; ++i) div = div * h;
        if (r.is_zero()) return RingOps<C>::zero();
        b = bipoly_scale_exact_div(r, div);
        g = a.lc();
        if (delta > 0) {
            C num = RingOps<C>::one();
            for (int i = 0; i < delta; ++i) num = num * g;
            C den = RingOps<C>::one();
            for (int i = 0; i < delta - 1; ++i) den = den * h;
            h = RingOps<C>::exact_div(num, den);
        }
    }
    // b is now a constant; Res = sign * lc(b)^deg(a) / h^(deg(a) - 1)
    C num = RingOps<C>::one();
    for (int i = 0; i < a.deg(); ++i) num = num * b.lc();
    C den = RingOps<C>::one();
    for (int i = 0; i < a.deg() - 1; ++i) den = den * h;
    C res = a.deg() == 0 ? RingOps<C>::one() : RingOps<C>::exact_div(num, den);
    if (negate) res = RingOps<C>::zero() - res;
    return res;
}

} // namespace pvg

#endif
