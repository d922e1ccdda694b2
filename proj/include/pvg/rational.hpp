#ifndef PVG_RATIONAL_HPP
#define PVG_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <iosfwd>

#include "pvg/errors.hpp"

namespace pvg {

using Integer = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin strong type over GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0)
            throw ZeroInput("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw ZeroInput("division of rational by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero())
            throw ZeroInput("inverse of zero rational");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    // Integer exponent; negative exponents invert, 0^0 = 1.
    static Rational pow(const Rational& base, long e) {
        if (e < 0)
            return pow(base.inverse(), -e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.v_.get_mpq_t()), mpq_numref(base.v_.get_mpq_t()),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.v_.get_mpq_t()), mpq_denref(base.v_.get_mpq_t()),
                   static_cast<unsigned long>(e));
        return r;
    }

    Integer floor() const {
        Integer q, n = num(), d = den();
        mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        return q;
    }
    Integer ceil() const {
        Integer q, n = num(), d = den();
        mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        return q;
    }
    // Nearest integer, half rounds away from zero.
    Integer round_nearest() const {
        if (sign() < 0)
            return -((-*this).round_nearest());
        Integer two_num = 2 * num() + den();
        Integer d = 2 * den();
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), two_num.get_mpz_t(), d.get_mpz_t());
        return q;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const {
        return v_.get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace pvg

#endif
