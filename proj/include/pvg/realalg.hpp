#ifndef PVG_REALALG_HPP
#define PVG_REALALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "pvg/poly.hpp"
#include "pvg/ratfunc.hpp"

namespace pvg {

// Signed-remainder sequence of p (starting p, p'). Throws ZeroPolynomial on
// zero input.
std::vector<Poly> sturm_sequence(const Poly& p);

// Number of distinct real roots. Multiplicities are ignored.
int count_real_roots(const Poly& p);

// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots_in(const Poly& p, const Rational& lo, const Rational& hi);

// A real algebraic number in normal form: monic minimal polynomial over Q
// plus an open rational isolating interval containing this root of it and no
// other; rationals carry a collapsed interval lo == hi. All operations are
// value-pure; refinement never mutates shared state, so values are safe to
// share across threads.
class RealAlgebraic {
public:
    RealAlgebraic() : RealAlgebraic(Rational(0)) {}
    RealAlgebraic(long v) : RealAlgebraic(Rational(v)) {}
    RealAlgebraic(const Rational& v);

    // The unique root of p in (lo, hi]. Throws ZeroPolynomial on p == 0 and
    // ZeroInput when the interval holds zero or several roots.
    static RealAlgebraic from_root(const Poly& p, const Rational& lo, const Rational& hi);

    bool is_rational() const { return lo_ == hi_; }
    Rational rational_value() const;        // requires is_rational
    const Poly& minimal_poly() const { return min_; }
    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }

    int sign() const;
    bool is_zero() const { return is_rational() && lo_.is_zero(); }

    // Sign of q at this point; exact, 0 iff the minimal polynomial divides q.
    int sign_at(const Poly& q) const;

    RealAlgebraic operator-() const;
    RealAlgebraic inverse() const;          // throws ZeroInput at zero
    friend RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b);
    friend RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b);
    friend RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b);
    friend RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b);
    RealAlgebraic pow(long e) const;

    static int compare(const RealAlgebraic& a, const RealAlgebraic& b);
    friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
        return compare(a, b) == 0;
    }
    friend bool operator!=(const RealAlgebraic& a, const RealAlgebraic& b) {
        return compare(a, b) != 0;
    }
    friend bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) {
        return compare(a, b) < 0;
    }
    friend bool operator<=(const RealAlgebraic& a, const RealAlgebraic& b) {
        return compare(a, b) <= 0;
    }
    friend bool operator>(const RealAlgebraic& a, const RealAlgebraic& b) {
        return compare(a, b) > 0;
    }
    friend bool operator>=(const RealAlgebraic& a, const RealAlgebraic& b) {
        return compare(a, b) >= 0;
    }

    // Copy whose isolating interval has width at most eps (eps > 0).
    RealAlgebraic refined(const Rational& eps) const;

    // Copy carrying the canonical isolating interval: bisection of
    // (-bound, bound) from the root bound of the minimal polynomial, stopped
    // at first isolation. Depends only on the value, not on how it was
    // produced, and makes printed output reproducible.
    RealAlgebraic canonicalized() const;

    // "num/den" for rationals, otherwise "root(<primitive integer minimal
    // polynomial>,[lo,hi])" with the canonical interval.
    std::string str() const;

private:
    RealAlgebraic(Poly m, Rational lo, Rational hi)
        : min_(std::move(m)), lo_(std::move(lo)), hi_(std::move(hi)) {}
    void refine_step();                     // one bisection of (lo, hi)
    void refine_sign_definite();            // exclude 0 from the interval
    friend struct RealAlgebraicOps;

    Poly min_;        // monic irreducible
    Rational lo_, hi_;
};

// All distinct real roots in ascending order; empty for root-free input.
// Throws ZeroPolynomial on zero input.
std::vector<RealAlgebraic> real_roots(const Poly& p);

// The real n-th root, n >= 1 (ZeroInput otherwise). For odd n defined
// everywhere; for even n absent when x < 0, and the non-negative root is
// returned when both signs would do.
std::optional<RealAlgebraic> nth_root(const RealAlgebraic& x, int n);

// Rational strictly below / above x, and strictly between a and b (pre a < b).
Rational rational_below(const RealAlgebraic& x);
Rational rational_above(const RealAlgebraic& x);
Rational rational_between(const RealAlgebraic& a, const RealAlgebraic& b);

// A point of the real line approached from one side, or an infinite end.
struct Cut {
    enum class Kind { MinusInfinity, PlusInfinity, LeftOf, RightOf };
    Kind kind = Kind::PlusInfinity;
    RealAlgebraic point;   // meaningful for LeftOf / RightOf only

    static Cut minus_infinity() { return {Kind::MinusInfinity, RealAlgebraic()}; }
    static Cut plus_infinity() { return {Kind::PlusInfinity, RealAlgebraic()}; }
    static Cut left_of(RealAlgebraic p) { return {Kind::LeftOf, std::move(p)}; }
    static Cut right_of(RealAlgebraic p) { return {Kind::RightOf, std::move(p)}; }

    // "t -> -inf", "t -> +inf", "t -> <point>-", "t -> <point>+"
    std::string str() const;

    friend bool operator==(const Cut& a, const Cut& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::LeftOf || a.kind == Kind::RightOf) return a.point == b.point;
        return true;
    }
};

// Sign that f takes on the near side of the cut: the sign of f(r +/- e) for
// infinitesimal e > 0, or towards the infinite ends. Zero only for f == 0.
int sign_at_cut(const RatFunc& f, const Cut& cut);

// Same sign together with checkable evidence: f evaluates to `value` at the
// rational `sample`, and num*den of f has no root strictly between the cut
// and the sample -- concretely, none in (window_lo, window_hi] other than
// possibly the cut point itself, with the sample at the window edge. For the
// infinite cuts the window edge facing the infinity bounds all roots of
// num*den instead.
struct CutSignCertificate {
    int sign = 0;
    Rational sample;
    Rational value;
    Rational window_lo, window_hi;
};
CutSignCertificate sign_at_cut_certified(const RatFunc& f, const Cut& cut);

} // namespace pvg

#endif
