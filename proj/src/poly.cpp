#include "pvg/poly.hpp"

#include <sstream>

#include "pvg/errors.hpp"
#include "zpoly.hpp"

namespace pvg {

namespace {
const Rational kZero(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int degree, const Rational& c) {
    if (degree < 0) throw ZeroInput("negative monomial degree");
    if (c.is_zero()) return Poly();
    Poly p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

const Rational& Poly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::lc() const {
    if (c_.empty()) throw ZeroPolynomial();
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw ZeroPolynomial();
    return scaled(lc().inverse());
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    Poly r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
    r.trim();
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

Poly Poly::shift(const Rational& c) const {
    Poly lin;   // t + c
    lin.c_ = {c, Rational(1)};
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * lin;
        acc += Poly(c_[i]);
    }
    return acc;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw ZeroInput("negative polynomial power");
    Poly r = Poly(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw ZeroInput("division by zero polynomial");
    r = a;
    q = Poly();
    const int db = b.deg();
    if (r.deg() >= db)
        q.c_.assign(static_cast<std::size_t>(r.deg() - db + 1), Rational(0));
    const Rational inv_lc = b.lc().inverse();
    while (!r.is_zero() && r.deg() >= db) {
        const int k = r.deg() - db;
        Rational coeff = r.lc() * inv_lc;
        q.c_[static_cast<std::size_t>(k)] = coeff;
        for (int i = 0; i <= db; ++i)
            r.c_[static_cast<std::size_t>(k + i)] -= coeff * b[i];
        r.trim();
    }
    q.trim();
    return;
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw InternalError("polynomial division expected to be exact");
    return q;
}

bool Poly::divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    Poly q, r;
    divrem(a, b, q, r);
    return r.is_zero();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const Rational& c = (*this)[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = a.is_one();
        if (i == 0) {
            out << a.str();
        } else {
            if (!unit) out << a.str() << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) return Poly();
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    using detail::ZPoly;
    ZPoly a = detail::z_from_poly(p).num;
    ZPoly b = detail::z_from_poly(q).num;
    if (a.deg() < b.deg()) std::swap(a, b);
    Integer g(1), h(1);
    while (true) {
        const int delta = a.deg() - b.deg();
        ZPoly r = detail::z_prem(a, b);
        if (r.is_zero()) break;
        if (r.deg() == 0) return Poly(1);
        a = std::move(b);
        Integer div = g;
        for (int i = 0; i < delta; ++i) div *= h;
        b = detail::z_scale_div(r, div);
        g = a.lc();
        if (delta > 0) {
            Integer num(1);
            for (int i = 0; i < delta; ++i) num *= g;
            Integer den(1);
            for (int i = 0; i < delta - 1; ++i) den *= h;
            Integer quo, rem;
            mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rem != 0) throw InternalError("subresultant scale not integral");
            h = quo;
        }
    }
    return detail::z_to_poly(detail::z_primitive(b)).monic();
}

ExtGcd poly_ext_gcd(const Poly& p, const Poly& q) {
    // Rational extended Euclid; only used at the small degrees produced by
    // partial fractions and Hermite reduction.
    Poly r0 = p, r1 = q;
    Poly u0(1), u1(0), v0(0), v1(1);
    while (!r1.is_zero()) {
        Poly quo, rem;
        Poly::divrem(r0, r1, quo, rem);
        Poly u2 = u0 - quo * u1;
        Poly v2 = v0 - quo * v1;
        r0 = std::move(r1); r1 = std::move(rem);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {Poly(), u0, v0};
    const Rational s = r0.lc().inverse();
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

std::vector<std::pair<Poly, int>> squarefree_factor(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<std::pair<Poly, int>> out;
    Poly f = p.monic();
    if (f.is_constant()) return out;
    Poly fp = f.derivative();
    Poly a0 = poly_gcd(f, fp);
    Poly b = Poly::exact_div(f, a0);
    Poly c = Poly::exact_div(fp, a0);
    Poly d = c - b.derivative();
    int i = 1;
    while (!b.is_constant()) {
        Poly a = poly_gcd(b, d);
        if (!a.is_constant()) out.emplace_back(a, i);
        b = Poly::exact_div(b, a);
        c = Poly::exact_div(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

} // namespace pvg
