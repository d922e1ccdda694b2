#include "pvg/realalg.hpp"

#include <sstream>

#include "pvg/bipoly.hpp"
#include "pvg/errors.hpp"
#include "pvg/factor.hpp"
#include "zpoly.hpp"

namespace pvg {

namespace {

// Hard step budget for every interval refinement loop. Exhaustion raises
// InternalError; results are exact or absent, never approximate.
constexpr int kBudget = 256;

Poly linear(const Rational& root) { return Poly::t() - Poly(root); }

Poly squarefree_part(const Poly& p) {
    Poly g = poly_gcd(p, p.derivative());
    return Poly::exact_div(p.monic(), g);
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at(const std::vector<Poly>& seq, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const Poly& s : seq) signs.push_back(s.eval(x).sign());
    return variations(signs);
}

int variations_at_infinity(const std::vector<Poly>& seq, bool plus) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const Poly& s : seq) {
        int sg = s.lc().sign();
        if (!plus && (s.deg() & 1)) sg = -sg;
        signs.push_back(sg);
    }
    return variations(signs);
}

// 1 + max |coefficient| of the monic normalization: every real root lies
// strictly inside (-bound, bound).
Rational cauchy_bound(const Poly& p) {
    if (p.deg() < 1) return Rational(1);
    Poly q = p.monic();
    Rational m(0);
    for (int i = 0; i < q.deg(); ++i) {
        Rational a = q[i].abs();
        if (a > m) m = a;
    }
    return m + Rational(1);
}

} // namespace

std::vector<Poly> sturm_sequence(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<Poly> seq = {p};
    Poly d = p.derivative();
    while (!d.is_zero()) {
        seq.push_back(d);
        Poly q, r;
        Poly::divrem(seq[seq.size() - 2], seq.back(), q, r);
        d = -r;
    }
    return seq;
}

int count_real_roots(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.is_constant()) return 0;
    Poly q = squarefree_part(p);
    if (q.is_constant()) return 0;
    std::vector<Poly> seq = sturm_sequence(q);
    return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

int count_real_roots_in(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (lo > hi) throw ZeroInput("inverted interval");
    if (lo == hi) return 0;
    if (p.is_constant()) return 0;
    Poly q = squarefree_part(p);
    int at_hi = 0;
    if (q.eval(hi).is_zero()) {
        at_hi = 1;
        q = Poly::exact_div(q, linear(hi));
    }
    if (q.eval(lo).is_zero()) q = Poly::exact_div(q, linear(lo));
    if (q.is_constant()) return at_hi;
    std::vector<Poly> seq = sturm_sequence(q);
    return variations_at(seq, lo) - variations_at(seq, hi) + at_hi;
}

// ---------------------------------------------------------------------------
// RealAlgebraic

RealAlgebraic::RealAlgebraic(const Rational& v) : min_(linear(v)), lo_(v), hi_(v) {}

Rational RealAlgebraic::rational_value() const {
    if (!is_rational()) throw InternalError("rational_value on an irrational number");
    return lo_;
}

RealAlgebraic RealAlgebraic::from_root(const Poly& p, const Rational& lo,
                                       const Rational& hi) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (lo > hi) throw ZeroInput("inverted interval");
    const Factorization fac = factor_rational(p);
    int total = 0;
    const Poly* hit = nullptr;
    for (const auto& [q, mult] : fac.factors) {
        const int c = count_real_roots_in(q, lo, hi);
        total += c;
        if (c == 1 && hit == nullptr) hit = &q;
    }
    if (total != 1 || hit == nullptr)
        throw ZeroInput("interval must isolate exactly one root");
    if (hit->deg() == 1) return RealAlgebraic(-(*hit)[0]);
    return RealAlgebraic(*hit, lo, hi);
}

void RealAlgebraic::refine_step() {
    if (is_rational()) return;
    const Rational mid = (lo_ + hi_) / Rational(2);
    const int s_lo = min_.eval(lo_).sign();
    const int s_mid = min_.eval(mid).sign();
    if (s_mid == 0 || s_lo == 0) throw InternalError("isolating endpoint became a root");
    if (s_lo * s_mid < 0)
        hi_ = mid;
    else
        lo_ = mid;
}

void RealAlgebraic::refine_sign_definite() {
    if (is_rational()) return;
    for (int i = 0; i < kBudget; ++i) {
        if (lo_.sign() == hi_.sign() && lo_.sign() != 0) return;
        refine_step();
    }
    throw InternalError("refinement budget exhausted separating from zero");
}

int RealAlgebraic::sign() const {
    if (is_rational()) return lo_.sign();
    RealAlgebraic c = *this;
    c.refine_sign_definite();
    return c.lo_.sign();
}

int RealAlgebraic::sign_at(const Poly& q) const {
    if (q.is_zero()) return 0;
    if (is_rational()) return q.eval(lo_).sign();
    Poly quo, rem;
    Poly::divrem(q, min_, quo, rem);
    if (rem.is_zero()) return 0;
    RealAlgebraic c = *this;
    for (int i = 0; i < kBudget; ++i) {
        if (count_real_roots_in(rem, c.lo_, c.hi_) == 0) return rem.eval(c.hi_).sign();
        c.refine_step();
    }
    throw InternalError("refinement budget exhausted in sign evaluation");
}

RealAlgebraic RealAlgebraic::operator-() const {
    if (is_rational()) return RealAlgebraic(-lo_);
    std::vector<Rational> c(min_.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i & 1) c[i] = -c[i];
    Poly m(std::move(c));
    if (min_.deg() & 1) m = m.scaled(Rational(-1));
    return RealAlgebraic(std::move(m), -hi_, -lo_);
}

RealAlgebraic RealAlgebraic::inverse() const {
    if (is_zero()) throw ZeroInput("inverse of zero");
    if (is_rational()) return RealAlgebraic(lo_.inverse());
    RealAlgebraic c = *this;
    c.refine_sign_definite();
    std::vector<Rational> rev(c.min_.coeffs().rbegin(), c.min_.coeffs().rend());
    Poly m = Poly(std::move(rev)).monic();
    return RealAlgebraic(std::move(m), c.hi_.inverse(), c.lo_.inverse());
}

namespace {

struct Combine {
    // interval endpoints of the result from sign-stable operand intervals
    virtual void window(const RealAlgebraic& a, const RealAlgebraic& b, Rational& lo,
                        Rational& hi) const = 0;
    virtual ~Combine() = default;
};

} // namespace

struct RealAlgebraicOps {
    static RealAlgebraic make(Poly m, Rational lo, Rational hi) {
        return RealAlgebraic(std::move(m), std::move(lo), std::move(hi));
    }
    static void refine(RealAlgebraic& x) { x.refine_step(); }
    static void sign_definite(RealAlgebraic& x) { x.refine_sign_definite(); }

    // Isolates the root of `p` pinned by the shrinking window around the
    // combined value of a and b.
    static RealAlgebraic isolate(const Poly& p, RealAlgebraic a, RealAlgebraic b,
                                 const Combine& op) {
        const Factorization fac = factor_rational(p);
        for (int round = 0; round < kBudget; ++round) {
            Rational lo, hi;
            op.window(a, b, lo, hi);
            int total = 0;
            const Poly* hit = nullptr;
            for (const auto& [q, mult] : fac.factors) {
                const int c = count_real_roots_in(q, lo, hi);
                total += c;
                if (c == 1 && hit == nullptr) hit = &q;
            }
            if (total == 1 && hit != nullptr) {
                if (hit->deg() == 1) return RealAlgebraic(-(*hit)[0]);
                return RealAlgebraic(*hit, lo, hi);
            }
            a.refine_step();
            b.refine_step();
        }
        throw InternalError("refinement budget exhausted isolating a combined root");
    }
};

namespace {

struct SumCombine : Combine {
    void window(const RealAlgebraic& a, const RealAlgebraic& b, Rational& lo,
                Rational& hi) const override {
        lo = a.lower() + b.lower();
        hi = a.upper() + b.upper();
    }
};

struct ProductCombine : Combine {
    void window(const RealAlgebraic& a, const RealAlgebraic& b, Rational& lo,
                Rational& hi) const override {
        const Rational p1 = a.lower() * b.lower();
        const Rational p2 = a.lower() * b.upper();
        const Rational p3 = a.upper() * b.lower();
        const Rational p4 = a.upper() * b.upper();
        lo = std::min(std::min(p1, p2), std::min(p3, p4));
        hi = std::max(std::max(p1, p2), std::max(p3, p4));
    }
};

// m_b(x - y) as a polynomial in y with Poly-in-x coefficients
PolyOf<Poly> compose_difference(const Poly& mb) {
    PolyOf<Poly> lin(std::vector<Poly>{Poly::t(), Poly(-1)});
    PolyOf<Poly> acc;
    for (int j = mb.deg(); j >= 0; --j) {
        acc = bipoly_mul(acc, lin);
        acc = bipoly_add(acc, PolyOf<Poly>(std::vector<Poly>{Poly(mb[j])}));
    }
    return acc;
}

PolyOf<Poly> lift_constant(const Poly& m) {
    std::vector<Poly> c;
    c.reserve(m.coeffs().size());
    for (const auto& q : m.coeffs()) c.emplace_back(Poly(q));
    return PolyOf<Poly>(std::move(c));
}

} // namespace

RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rational() && b.is_rational())
        return RealAlgebraic(a.rational_value() + b.rational_value());
    if (a.is_rational()) return b + a;
    if (b.is_rational()) {
        const Rational r = b.rational_value();
        if (r.is_zero()) return a;
        return RealAlgebraicOps::make(a.minimal_poly().shift(-r), a.lower() + r,
                                      a.upper() + r);
    }
    const Poly p = resultant(lift_constant(a.minimal_poly()),
                             compose_difference(b.minimal_poly()));
    return RealAlgebraicOps::isolate(p, a, b, SumCombine{});
}

RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b) {
    return a + (-b);
}

RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rational() && b.is_rational())
        return RealAlgebraic(a.rational_value() * b.rational_value());
    if (a.is_rational()) return b * a;
    if (b.is_rational()) {
        const Rational r = b.rational_value();
        if (r.is_zero()) return RealAlgebraic();
        // m(t/r), rescaled monic
        std::vector<Rational> c(a.minimal_poly().coeffs());
        const int d = a.minimal_poly().deg();
        Rational pw(1);
        for (int i = d - 1; i >= 0; --i) {
            pw *= r;
            c[static_cast<std::size_t>(i)] *= pw;
        }
        Poly m(std::move(c));
        Rational lo = a.lower() * r, hi = a.upper() * r;
        if (r.sign() < 0) std::swap(lo, hi);
        return RealAlgebraicOps::make(std::move(m), std::move(lo), std::move(hi));
    }
    RealAlgebraic aa = a, bb = b;
    RealAlgebraicOps::sign_definite(aa);
    RealAlgebraicOps::sign_definite(bb);
    // y^db * m_b(x/y) laid out in y with coefficient x^j at y^(db-j)
    const Poly& mb = bb.minimal_poly();
    const int db = mb.deg();
    std::vector<Poly> bc(static_cast<std::size_t>(db) + 1, Poly());
    for (int j = 0; j <= db; ++j)
        bc[static_cast<std::size_t>(db - j)] = Poly::monomial(j, mb[j]);
    const Poly p = resultant(lift_constant(aa.minimal_poly()),
                             PolyOf<Poly>(std::move(bc)));
    return RealAlgebraicOps::isolate(p, aa, bb, ProductCombine{});
}

RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b) {
    return a * b.inverse();
}

RealAlgebraic RealAlgebraic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RealAlgebraic r(1);
    RealAlgebraic base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

int RealAlgebraic::compare(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rational() && b.is_rational()) {
        if (a.lo_ < b.lo_) return -1;
        if (a.lo_ > b.lo_) return 1;
        return 0;
    }
    if (a.min_ == b.min_) {
        const Rational lo = std::max(a.lo_, b.lo_);
        const Rational hi = std::min(a.hi_, b.hi_);
        if (lo < hi && count_real_roots_in(a.min_, lo, hi) == 1) return 0;
    }
    // at least one operand is irrational here, so touching intervals still
    // separate the values strictly
    RealAlgebraic x = a, y = b;
    for (int i = 0; i < kBudget; ++i) {
        if (x.hi_ <= y.lo_) return -1;
        if (y.hi_ <= x.lo_) return 1;
        x.refine_step();
        y.refine_step();
    }
    throw InternalError("refinement budget exhausted in comparison");
}

RealAlgebraic RealAlgebraic::refined(const Rational& eps) const {
    if (eps.sign() <= 0) throw ZeroInput("refinement width must be positive");
    RealAlgebraic c = *this;
    while (c.hi_ - c.lo_ > eps) c.refine_step();
    return c;
}

RealAlgebraic RealAlgebraic::canonicalized() const {
    if (is_rational()) return *this;
    const Rational bound = cauchy_bound(min_);
    Rational lo = -bound, hi = bound;
    // Invariant: *this lies strictly inside (lo, hi). Midpoints are never
    // equal to *this since the value is irrational.
    for (int iter = 0; iter < kBudget; ++iter) {
        if (count_real_roots_in(min_, lo, hi) == 1)
            return RealAlgebraicOps::make(min_, lo, hi);
        const Rational mid = (lo + hi) / Rational(2);
        if (compare(*this, RealAlgebraic(mid)) < 0) hi = mid; else lo = mid;
    }
    throw InternalError("canonical isolation exceeded the refinement budget");
}

std::string RealAlgebraic::str() const {
    if (is_rational()) return lo_.str();
    const RealAlgebraic c = canonicalized();
    const Poly prim = detail::z_to_poly(detail::z_from_poly(min_).num);
    std::ostringstream out;
    out << "root(" << prim.str() << ",[" << c.lo_.str() << "," << c.hi_.str()
        << "])";
    return out.str();
}

// ---------------------------------------------------------------------------
// Root isolation and radicals

namespace {

// q irreducible of degree >= 2, so interval endpoints are never roots
void isolate_rec(const Poly& q, const Rational& lo, const Rational& hi,
                 std::vector<RealAlgebraic>& out) {
    const int c = count_real_roots_in(q, lo, hi);
    if (c == 0) return;
    if (c == 1) {
        out.push_back(RealAlgebraicOps::make(q, lo, hi));
        return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    isolate_rec(q, lo, mid, out);
    isolate_rec(q, mid, hi, out);
}

} // namespace

std::vector<RealAlgebraic> real_roots(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<RealAlgebraic> out;
    const Factorization fac = factor_rational(p);
    for (const auto& [q, mult] : fac.factors) {
        if (q.deg() == 1) {
            out.push_back(RealAlgebraic(-q[0]));
            continue;
        }
        const Rational bound = cauchy_bound(q);
        isolate_rec(q, -bound, bound, out);
    }
    std::sort(out.begin(), out.end(),
              [](const RealAlgebraic& x, const RealAlgebraic& y) { return x < y; });
    return out;
}

std::optional<RealAlgebraic> nth_root(const RealAlgebraic& x, int n) {
    if (n < 1) throw ZeroInput("root degree must be at least 1");
    if (x.is_zero()) return RealAlgebraic();
    if (n == 1) return x;
    const int sx = x.sign();
    if ((n % 2 == 0) && sx < 0) return std::nullopt;

    if (x.is_rational()) {
        const Rational v = x.rational_value();
        Integer num_abs = abs(v.num());
        Integer rn, rd;
        const bool en = mpz_root(rn.get_mpz_t(), num_abs.get_mpz_t(),
                                 static_cast<unsigned long>(n)) != 0;
        const bool ed = mpz_root(rd.get_mpz_t(), v.den().get_mpz_t(),
                                 static_cast<unsigned long>(n)) != 0;
        if (en && ed) {
            Rational r(rn, rd);
            if (sx < 0) r = -r;
            return RealAlgebraic(r);
        }
        const Poly q = Poly::monomial(n, Rational(v.den())) - Poly(Rational(v.num()));
        for (const RealAlgebraic& z : real_roots(q)) {
            const int sz = z.sign();
            if ((n % 2 == 0 && sz > 0) || (n % 2 == 1 && sz == sx)) return z;
        }
        throw InternalError("no real root matched the radical sign");
    }

    // minimal polynomial composed with z^n
    const Poly& m = x.minimal_poly();
    std::vector<Rational> comp(static_cast<std::size_t>(m.deg() * n) + 1, Rational(0));
    for (int k = 0; k <= m.deg(); ++k) comp[static_cast<std::size_t>(k * n)] = m[k];
    const Poly p(std::move(comp));

    for (const RealAlgebraic& z : real_roots(p)) {
        const int sz = z.sign();
        if (n % 2 == 0 && sz <= 0) continue;
        if (n % 2 == 1 && sz != sx) continue;
        // z^n is some real root of m; keep z exactly when that root is x
        if (z.pow(n) == x) return z;
    }
    throw InternalError("no real root matched the radical");
}

// ---------------------------------------------------------------------------
// Rational probes near values

Rational rational_below(const RealAlgebraic& x) {
    // irrational endpoints are strict by the isolation invariant
    return x.is_rational() ? x.rational_value() - Rational(1) : x.lower();
}

Rational rational_above(const RealAlgebraic& x) {
    return x.is_rational() ? x.rational_value() + Rational(1) : x.upper();
}

Rational rational_between(const RealAlgebraic& a, const RealAlgebraic& b) {
    RealAlgebraic x = a, y = b;
    Rational w(1);
    for (int iter = 0; iter < kBudget; ++iter) {
        if (x.upper() < y.lower())
            return (x.upper() + y.lower()) / Rational(2);
        x = x.refined(w);
        y = y.refined(w);
        w = w / Rational(2);
    }
    throw InternalError("separating the two values exceeded the refinement budget");
}

// ---------------------------------------------------------------------------
// Cuts

std::string Cut::str() const {
    switch (kind) {
        case Kind::MinusInfinity: return "t -> -inf";
        case Kind::PlusInfinity: return "t -> +inf";
        case Kind::LeftOf: return "t -> " + point.str() + "-";
        case Kind::RightOf: return "t -> " + point.str() + "+";
    }
    throw InternalError("unreachable cut kind");
}

namespace {

CutSignCertificate infinite_sign(const RatFunc& f, bool plus) {
    CutSignCertificate cert;
    int s = f.num().lc().sign() * f.den().lc().sign();
    if (!plus && ((f.num().deg() + f.den().deg()) & 1)) s = -s;
    const Poly h = f.num() * f.den();
    const Rational m = h.deg() >= 1 ? cauchy_bound(h) : Rational(0);
    cert.sign = s;
    if (plus) {
        cert.sample = m + Rational(1);
        cert.window_lo = m;
        cert.window_hi = cert.sample;
    } else {
        cert.sample = -m - Rational(1);
        cert.window_lo = cert.sample;
        cert.window_hi = -m;
    }
    cert.value = f.eval(cert.sample);
    if (cert.value.sign() != s)
        throw InternalError("asymptotic sign disagrees with witness evaluation");
    return cert;
}

CutSignCertificate one_sided_rational(const RatFunc& f, const Rational& r, bool right) {
    const Poly h = f.num() * f.den();
    Rational w(1);
    for (int i = 0; i < kBudget; ++i) {
        if (right) {
            if (count_real_roots_in(h, r, r + w) == 0) {
                CutSignCertificate cert;
                cert.sample = r + w;
                cert.value = f.eval(cert.sample);
                cert.sign = cert.value.sign();
                cert.window_lo = r;
                cert.window_hi = cert.sample;
                return cert;
            }
        } else {
            const int expected = h.eval(r).is_zero() ? 1 : 0;
            if (count_real_roots_in(h, r - w, r) == expected &&
                !h.eval(r - w).is_zero()) {
                CutSignCertificate cert;
                cert.sample = r - w;
                cert.value = f.eval(cert.sample);
                cert.sign = cert.value.sign();
                cert.window_lo = cert.sample;
                cert.window_hi = r;
                return cert;
            }
        }
        w = w / Rational(2);
    }
    throw InternalError("refinement budget exhausted at a rational cut");
}

CutSignCertificate one_sided_irrational(const RatFunc& f, const RealAlgebraic& r,
                                        bool right) {
    const Poly hs = squarefree_part(f.num() * f.den());
    Poly quo, rem;
    Poly::divrem(hs, r.minimal_poly(), quo, rem);
    const int expected = rem.is_zero() ? 1 : 0;
    RealAlgebraic c = r;
    for (int i = 0; i < kBudget; ++i) {
        if (count_real_roots_in(hs, c.lower(), c.upper()) == expected &&
            (right || !hs.eval(c.lower()).is_zero())) {
            CutSignCertificate cert;
            cert.sample = right ? c.upper() : c.lower();
            cert.value = f.eval(cert.sample);
            cert.sign = cert.value.sign();
            cert.window_lo = c.lower();
            cert.window_hi = c.upper();
            return cert;
        }
        RealAlgebraicOps::refine(c);
    }
    throw InternalError("refinement budget exhausted at an algebraic cut");
}

} // namespace

CutSignCertificate sign_at_cut_certified(const RatFunc& f, const Cut& cut) {
    if (f.is_zero()) return CutSignCertificate{};
    switch (cut.kind) {
        case Cut::Kind::PlusInfinity: return infinite_sign(f, true);
        case Cut::Kind::MinusInfinity: return infinite_sign(f, false);
        case Cut::Kind::RightOf:
            if (cut.point.is_rational())
                return one_sided_rational(f, cut.point.rational_value(), true);
            return one_sided_irrational(f, cut.point, true);
        case Cut::Kind::LeftOf:
            if (cut.point.is_rational())
                return one_sided_rational(f, cut.point.rational_value(), false);
            return one_sided_irrational(f, cut.point, false);
    }
    throw InternalError("unreachable cut kind");
}

int sign_at_cut(const RatFunc& f, const Cut& cut) {
    return sign_at_cut_certified(f, cut).sign;
}

} // namespace pvg
