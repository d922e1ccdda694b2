#include "pvg/factor.hpp"

#include <algorithm>

#include "pvg/errors.hpp"
#include "zpoly.hpp"

// Factorization over Q via reduction to monic integer polynomials:
// squarefree split, Berlekamp factorization modulo a small odd prime with a
// squarefree reduction, quadratic Hensel lifting of a balanced factor tree
// past the factor coefficient bound, then subset recombination with exact
// integer division as the certificate.

namespace pvg {
namespace {

using detail::ZPoly;

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for a small odd prime p. Coefficients live in [0, p).

using PolyP = std::vector<long>;

void p_trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int p_deg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

long p_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw InternalError("modular inverse of non-unit");
    return t < 0 ? t + p : t;
}

PolyP p_mul(const PolyP& a, const PolyP& b, long p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    p_trim(r);
    return r;
}

PolyP p_sub(const PolyP& a, const PolyP& b, long p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
    p_trim(r);
    return r;
}

PolyP p_scale(const PolyP& a, long k, long p) {
    k %= p;
    if (k < 0) k += p;
    PolyP r = a;
    for (auto& x : r) x = x * k % p;
    p_trim(r);
    return r;
}

PolyP p_monic(const PolyP& a, long p) {
    if (a.empty()) return a;
    return p_scale(a, p_inv(a.back(), p), p);
}

void p_divrem(const PolyP& a, const PolyP& b, long p, PolyP& q, PolyP& r) {
    if (b.empty()) throw ZeroInput("modular division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const long inv = p_inv(b.back(), p);
    while (p_deg(r) >= p_deg(b)) {
        const int k = p_deg(r) - p_deg(b);
        const long c = r.back() * inv % p;
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[static_cast<std::size_t>(k) + i] =
                (r[static_cast<std::size_t>(k) + i] - c * b[i] % p + p) % p;
        p_trim(r);
    }
    p_trim(q);
}

PolyP p_mod(const PolyP& a, const PolyP& b, long p) {
    PolyP q, r;
    p_divrem(a, b, p, q, r);
    return r;
}

PolyP p_gcd(PolyP a, PolyP b, long p) {
    while (!b.empty()) {
        PolyP r = p_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return p_monic(a, p);
}

PolyP p_derivative(const PolyP& a, long p) {
    if (a.size() <= 1) return {};
    PolyP r(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = static_cast<long>(i % static_cast<std::size_t>(p)) * a[i] % p;
    p_trim(r);
    return r;
}

PolyP p_from_z(const ZPoly& a, long p) {
    PolyP r(a.c.size(), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        Integer m = a.c[i] % p;
        long v = static_cast<long>(m.get_si());
        r[i] = v < 0 ? v + p : v;
    }
    p_trim(r);
    return r;
}

ZPoly z_from_p(const PolyP& a) {
    ZPoly r;
    r.c.reserve(a.size());
    for (long x : a) r.c.emplace_back(x);
    r.trim();
    return r;
}

// Bezout pair for coprime monic g, h mod p: s*g + t*h = 1 with
// deg s < deg h and deg t < deg g.
void p_bezout(const PolyP& g, const PolyP& h, long p, PolyP& s, PolyP& t) {
    PolyP r0 = g, r1 = h;
    PolyP s0 = {1}, s1 = {};
    while (!r1.empty()) {
        PolyP q, r;
        p_divrem(r0, r1, p, q, r);
        PolyP s2 = p_sub(s0, p_mul(q, s1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (p_deg(r0) != 0) throw InternalError("lift factors not coprime mod p");
    const long inv = p_inv(r0[0], p);
    s = p_mod(p_scale(s0, inv, p), h, p);
    // t = (1 - s*g) / h, exact in F_p[x].
    PolyP num = p_sub(PolyP{1}, p_mul(s, g, p), p);
    PolyP rem;
    p_divrem(num, h, p, t, rem);
    if (!rem.empty()) throw InternalError("Bezout completion not exact");
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a monic squarefree polynomial mod p.

std::vector<PolyP> berlekamp(const PolyP& f, long p) {
    const int n = p_deg(f);
    if (n <= 1) return {f};

    // x^p mod f by binary exponentiation.
    PolyP xp = {1};
    PolyP base = {0, 1};
    long e = p;
    while (e > 0) {
        if (e & 1) xp = p_mod(p_mul(xp, base, p), f, p);
        base = p_mod(p_mul(base, base, p), f, p);
        e >>= 1;
    }

    // Frobenius matrix: row i holds the coefficients of x^(i*p) mod f.
    std::vector<PolyP> rows(static_cast<std::size_t>(n));
    rows[0] = {1};
    for (int i = 1; i < n; ++i)
        rows[static_cast<std::size_t>(i)] =
            p_mod(p_mul(rows[static_cast<std::size_t>(i - 1)], xp, p), f, p);

    // Kernel of (Frobenius - identity), acting on coefficient columns.
    std::vector<std::vector<long>> m(static_cast<std::size_t>(n),
                                     std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            long v = j < static_cast<int>(rows[static_cast<std::size_t>(i)].size())
                         ? rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                         : 0;
            if (i == j) v = (v - 1 + p) % p;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    }
    std::vector<int> pivot_of_col(static_cast<std::size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int row = rank; row < n; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(rank)]);
        const long inv = p_inv(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (auto& x : m[static_cast<std::size_t>(rank)]) x = x * inv % p;
        for (int row = 0; row < n; ++row) {
            if (row == rank) continue;
            const long c = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                    (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -
                     c * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] % p + p) %
                    p;
        }
        pivot_of_col[static_cast<std::size_t>(col)] = rank;
        ++rank;
    }
    std::vector<PolyP> basis;
    for (int col = 0; col < n; ++col) {
        if (pivot_of_col[static_cast<std::size_t>(col)] >= 0) continue;
        PolyP v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int c2 = 0; c2 < n; ++c2) {
            const int r = pivot_of_col[static_cast<std::size_t>(c2)];
            if (r < 0) continue;
            long val = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            v[static_cast<std::size_t>(c2)] = (p - val) % p;
        }
        p_trim(v);
        basis.push_back(std::move(v));
    }

    const std::size_t r = basis.size();
    std::vector<PolyP> factors = {f};
    if (r == 1) return factors;
    bool progressed = true;
    while (factors.size() < r && progressed) {
        progressed = false;
        for (const PolyP& v : basis) {
            if (p_deg(v) < 1) continue;
            for (std::size_t i = 0; i < factors.size() && factors.size() < r; ++i) {
                if (p_deg(factors[i]) <= 1) continue;
                PolyP vm = p_mod(v, factors[i], p);
                for (long s = 0; s < p && factors.size() < r; ++s) {
                    PolyP shifted = vm;
                    if (shifted.empty()) shifted = {0};
                    shifted[0] = (shifted[0] - s % p + p) % p;
                    p_trim(shifted);
                    PolyP g = p_gcd(factors[i], shifted, p);
                    if (p_deg(g) > 0 && p_deg(g) < p_deg(factors[i])) {
                        PolyP q, rem;
                        p_divrem(factors[i], g, p, q, rem);
                        factors[i] = p_monic(q, p);
                        factors.push_back(g);
                        vm = p_mod(v, factors[i], p);
                        progressed = true;
                    }
                }
            }
        }
    }
    if (factors.size() != r) throw InternalError("modular factor split incomplete");
    return factors;
}

// ---------------------------------------------------------------------------
// Arithmetic on integer polynomials with coefficients reduced mod m.

Integer mod_reduce(const Integer& x, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZPoly zm_reduce(const ZPoly& a, const Integer& m) {
    ZPoly r = a;
    for (auto& x : r.c) x = mod_reduce(x, m);
    r.trim();
    return r;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    return zm_reduce(detail::z_mul(a, b), m);
}

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    return zm_reduce(detail::z_sub(a, b), m);
}

ZPoly zm_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
    return zm_reduce(detail::z_add(a, b), m);
}

void zm_divrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
    if (b.is_zero() || b.lc() != 1) throw InternalError("modular divisor must be monic");
    r = a;
    q = ZPoly();
    const int db = b.deg();
    if (r.deg() >= db) q.c.assign(static_cast<std::size_t>(r.deg() - db + 1), Integer(0));
    while (!r.is_zero() && r.deg() >= db) {
        const int k = r.deg() - db;
        Integer top = r.lc();
        q.c[static_cast<std::size_t>(k)] = top;
        for (int i = 0; i <= db; ++i) {
            Integer& ref = r.c[static_cast<std::size_t>(k + i)];
            ref = mod_reduce(ref - top * b.c[static_cast<std::size_t>(i)], m);
        }
        r.trim();
    }
    q = zm_reduce(q, m);
}

// Symmetric representative in (-m/2, m/2].
ZPoly zm_symmetric(const ZPoly& a, const Integer& m) {
    ZPoly r = zm_reduce(a, m);
    Integer half = m / 2;
    for (auto& x : r.c)
        if (x > half) x -= m;
    r.trim();
    return r;
}

struct LiftPair {
    ZPoly g, h, s, t;
};

// One quadratic lift step: from a factorization and Bezout pair mod m to the
// same data mod m^2. f, g, h monic; f = g*h (mod m), s*g + t*h = 1 (mod m).
LiftPair hensel_step(const ZPoly& f, const LiftPair& in, const Integer& m) {
    const Integer m2 = m * m;
    ZPoly e = zm_sub(zm_reduce(f, m2), zm_mul(in.g, in.h, m2), m2);
    ZPoly q, r;
    zm_divrem_monic(zm_mul(in.s, e, m2), in.h, m2, q, r);
    LiftPair out;
    out.g = zm_add(in.g, zm_add(zm_mul(in.t, e, m2), zm_mul(q, in.g, m2), m2), m2);
    out.h = zm_add(in.h, r, m2);
    if (out.g.deg() != in.g.deg() || out.g.lc() != 1 || out.h.lc() != 1)
        throw InternalError("lift step lost monicity");
    ZPoly b = zm_sub(zm_add(zm_mul(in.s, out.g, m2), zm_mul(in.t, out.h, m2), m2),
                     ZPoly({Integer(1)}), m2);
    ZPoly c, d;
    zm_divrem_monic(zm_mul(in.s, b, m2), out.h, m2, c, d);
    out.s = zm_sub(in.s, d, m2);
    out.t = zm_sub(in.t, zm_add(zm_mul(in.t, b, m2), zm_mul(c, out.g, m2), m2), m2);
    return out;
}

// Lifts the balanced product tree of the modular factors of f from mod p to
// mod target, where target is p^(2^j).
void hensel_tree(const ZPoly& f, const std::vector<PolyP>& parts, std::size_t lo,
                 std::size_t hi, long p, const Integer& target,
                 std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(zm_reduce(f, target));
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    PolyP gp = {1}, hp = {1};
    for (std::size_t i = lo; i < mid; ++i) gp = p_mul(gp, parts[i], p);
    for (std::size_t i = mid; i < hi; ++i) hp = p_mul(hp, parts[i], p);
    PolyP sp, tp;
    p_bezout(gp, hp, p, sp, tp);
    LiftPair cur{z_from_p(gp), z_from_p(hp), z_from_p(sp), z_from_p(tp)};
    Integer m(p);
    while (m < target) {
        cur = hensel_step(f, cur, m);
        m *= m;
    }
    hensel_tree(cur.g, parts, lo, mid, p, target, out);
    hensel_tree(cur.h, parts, mid, hi, p, target, out);
}

// ---------------------------------------------------------------------------
// Core: factor a monic squarefree integer polynomial into monic irreducible
// integer factors.

std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
    const int n = f.deg();
    if (n <= 1) return {f};

    // Pick an odd prime with squarefree reduction; among the first few usable
    // primes keep the one giving the fewest modular factors.
    long best_p = 0;
    std::vector<PolyP> best_parts;
    int usable = 0;
    Integer pz(2);
    while (usable < 3) {
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        if (pz > 10000) {
            if (best_p != 0) break;
            throw InternalError("no usable prime for modular factorization");
        }
        const long p = static_cast<long>(pz.get_si());
        PolyP fp = p_from_z(f, p);
        if (p_deg(fp) != n) continue;
        if (p_deg(p_gcd(fp, p_derivative(fp, p), p)) != 0) continue;
        std::vector<PolyP> parts = berlekamp(fp, p);
        ++usable;
        if (best_p == 0 || parts.size() < best_parts.size()) {
            best_p = p;
            best_parts = std::move(parts);
        }
        if (best_parts.size() == 1) break;
    }
    if (best_parts.size() == 1) return {f};
    const long p = best_p;

    // Factor coefficient bound (Mignotte): any monic factor g of f has
    // |g|_inf <= 2^n * |f|_2. Lift until the modulus exceeds twice that.
    Integer norm2_sq(0);
    for (const auto& c : f.c) norm2_sq += c * c;
    Integer bound4 = norm2_sq * 4;
    mpz_mul_2exp(bound4.get_mpz_t(), bound4.get_mpz_t(), 2 * static_cast<unsigned long>(n));
    Integer target(p);
    while (target * target <= bound4) target *= target;

    std::vector<ZPoly> lifted;
    std::sort(best_parts.begin(), best_parts.end(),
              [](const PolyP& a, const PolyP& b) { return p_deg(a) < p_deg(b); });
    hensel_tree(zm_reduce(f, target), best_parts, 0, best_parts.size(), p, target, lifted);

    // Zassenhaus recombination: try subsets of lifted factors in increasing
    // cardinality; exact division over Z certifies a true factor.
    std::vector<ZPoly> result;
    std::vector<std::size_t> live(lifted.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    ZPoly rest = f;
    std::size_t s = 1;
    while (2 * s <= live.size()) {
        bool found = false;
        std::vector<std::size_t> comb(s);
        for (std::size_t i = 0; i < s; ++i) comb[i] = i;
        for (;;) {
            ZPoly cand({Integer(1)});
            for (std::size_t i : comb) cand = zm_mul(cand, lifted[live[i]], target);
            cand = zm_symmetric(cand, target);
            ZPoly q, r;
            z_divrem_monic(rest, cand, q, r);
            if (r.is_zero()) {
                result.push_back(cand);
                rest = q;
                std::vector<std::size_t> next_live;
                for (std::size_t i = 0, k = 0; i < live.size(); ++i) {
                    if (k < s && comb[k] == i) { ++k; continue; }
                    next_live.push_back(live[i]);
                }
                live = std::move(next_live);
                found = true;
                break;
            }
            // next cardinality-s combination
            std::size_t i = s;
            while (i-- > 0) {
                if (comb[i] != i + live.size() - s) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = live.size() + 1; break; }
            }
            if (i > live.size()) break;
        }
        if (!found) ++s;
    }
    if (rest.deg() > 0) result.push_back(rest);
    else if (rest.deg() == 0 && rest.lc() != 1)
        throw InternalError("recombination left a non-trivial unit");
    return result;
}

// Factors a squarefree monic polynomial over Q into monic irreducibles. The
// integer model is made monic by the scale substitution y = lc * t, factored,
// and mapped back.
std::vector<Poly> factor_squarefree_rational(const Poly& sf) {
    ZPoly prim = detail::z_from_poly(sf).num;
    const int n = prim.deg();
    if (n == 1) return {sf.monic()};
    const Integer a = prim.lc();
    ZPoly monic_model;
    if (a == 1) {
        monic_model = prim;
    } else {
        monic_model.c.resize(prim.c.size());
        monic_model.c[static_cast<std::size_t>(n)] = 1;
        Integer pw(1);
        for (int i = n - 1; i >= 0; --i) {
            monic_model.c[static_cast<std::size_t>(i)] = prim.c[static_cast<std::size_t>(i)] * pw;
            pw *= a;
        }
    }
    std::vector<ZPoly> zfactors = factor_monic_squarefree(monic_model);
    std::vector<Poly> out;
    out.reserve(zfactors.size());
    for (const auto& g : zfactors) {
        if (a == 1) {
            out.push_back(detail::z_to_poly(g));
            continue;
        }
        ZPoly back = g;
        Integer pw(1);
        for (std::size_t i = 0; i < back.c.size(); ++i) {
            back.c[i] *= pw;
            pw *= a;
        }
        out.push_back(detail::z_to_poly(detail::z_primitive(back)).monic());
    }
    return out;
}

bool factor_order_less(const std::pair<Poly, int>& x, const std::pair<Poly, int>& y) {
    const Poly& a = x.first;
    const Poly& b = y.first;
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return x.second < y.second;
}

} // namespace

Factorization factor_rational(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    Factorization out;
    out.unit = p.lc();
    if (p.is_constant()) return out;
    for (const auto& [sf, mult] : squarefree_factor(p)) {
        for (const Poly& irr : factor_squarefree_rational(sf))
            out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_order_less);
    return out;
}

bool is_irreducible(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.is_constant()) return false;
    Factorization f = factor_rational(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

} // namespace pvg
