#ifndef PVG_POLY_HPP
#define PVG_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "pvg/rational.hpp"

namespace pvg {

// Dense univariate polynomial over Q in the variable t, coefficients
// indexed by degree. The zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    Poly(long c) { if (c != 0) c_.push_back(Rational(c)); }
    Poly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t() { return monomial(1, Rational(1)); }
    static Poly monomial(int degree, const Rational& c);

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    // Coefficient of t^i, zero outside the stored range.
    const Rational& operator[](int i) const;
    const Rational& lc() const;   // leading coefficient, requires non-zero
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rational& c) const;
    Poly monic() const;
    Poly derivative() const;
    Rational eval(const Rational& x) const;   // Horner
    Poly shift(const Rational& c) const;      // p(t + c)
    Poly pow(int e) const;                    // e >= 0

    // Euclidean division by a non-zero divisor.
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
    // Division known to be exact; throws InternalError on a non-zero remainder.
    static Poly exact_div(const Poly& a, const Poly& b);
    static bool divides(const Poly& b, const Poly& a);   // b | a

    // Canonical expression string over the report grammar, e.g. "2*t^3 - t + 1/2".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Monic gcd via a subresultant remainder sequence on primitive integer parts;
// gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

// Extended gcd over Q[t]: returns monic g together with u, v such that
// u*p + v*q = g.
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd poly_ext_gcd(const Poly& p, const Poly& q);

// Squarefree decomposition (Yun). Factors are monic, pairwise coprime and
// squarefree; the product of factor^multiplicity is monic(p). Throws
// ZeroPolynomial on zero input.
std::vector<std::pair<Poly, int>> squarefree_factor(const Poly& p);

inline Poly exact_div(const Poly& a, const Poly& b) { return Poly::exact_div(a, b); }

} // namespace pvg

#endif
