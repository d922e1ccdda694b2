#ifndef PVG_RATFUNC_HPP
#define PVG_RATFUNC_HPP

#include <string>

#include "pvg/poly.hpp"

namespace pvg {

// Element of Q(t), kept reduced: gcd(num, den) = 1 and den monic. The zero
// element is 0/1.
class RatFunc {
public:
    RatFunc() : den_(Poly(1)) {}
    RatFunc(long c) : num_(Poly(c)), den_(Poly(1)) {}
    RatFunc(const Rational& c) : num_(Poly(c)), den_(Poly(1)) {}
    RatFunc(const Poly& n) : num_(n), den_(Poly(1)) {}
    RatFunc(Poly n, Poly d);   // throws ZeroInput when d == 0

    static RatFunc t() { return RatFunc(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;
    RatFunc pow(long e) const;       // negative exponents invert first
    RatFunc derivative() const;
    RatFunc log_derivative() const;  // num'/num - den'/den, requires non-zero

    Rational eval(const Rational& x) const;   // throws PoleAtPoint at den roots

    // Canonical string: "num/den" with the numerator parenthesized when it
    // has more than one term and the denominator parenthesized unless it is
    // a power of t. A polynomial prints without the "/den" part.
    std::string str() const;

private:
    void reduce();
    Poly num_;
    Poly den_;
};

} // namespace pvg

#endif
