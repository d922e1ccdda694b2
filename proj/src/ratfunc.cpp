#include "pvg/ratfunc.hpp"

#include <sstream>

#include "pvg/errors.hpp"

namespace pvg {

namespace {

int term_count(const Poly& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) ++n;
    return n;
}

// t^k with k >= 1, coefficient 1
bool is_t_power(const Poly& p) {
    if (p.deg() < 1 || !p.lc().is_one()) return false;
    return term_count(p) == 1;
}

} // namespace

RatFunc::RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw ZeroInput("zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
    }
    if (!den_.lc().is_one()) {
        const Rational s = den_.lc().inverse();
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroInput("division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroInput("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1);
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::log_derivative() const {
    if (is_zero()) throw ZeroInput("logarithmic derivative of zero");
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * num_);
}

Rational RatFunc::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw PoleAtPoint("evaluation point is a pole");
    return num_.eval(x) / d;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream out;
    if (term_count(num_) > 1)
        out << "(" << num_.str() << ")";
    else
        out << num_.str();
    out << "/";
    if (is_t_power(den_))
        out << den_.str();
    else
        out << "(" << den_.str() << ")";
    return out.str();
}

} // namespace pvg
