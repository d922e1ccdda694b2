#pragma once

#include <string>
#include <vector>

#include "pvg/diffeq.hpp"
#include "pvg/ratfunc.hpp"
#include "pvg/realalg.hpp"

namespace pvg {

// Polynomial in the solution variable y and the constant parameter w, with
// rational function coefficients. Immutable value type.
class BiPoly {
public:
    BiPoly() = default;  // zero

    static BiPoly constant(RatFunc c);
    static BiPoly y();
    static BiPoly w();
    // coeff * y^ydeg * w^wdeg
    static BiPoly term(int ydeg, int wdeg, RatFunc coeff);

    bool is_zero() const { return c_.empty(); }
    int ydeg() const { return static_cast<int>(c_.size()) - 1; }
    // w-degree over all terms; -1 for the zero polynomial
    int wdeg() const;
    // coefficient of y^i w^j, zero outside the support
    const RatFunc& at(int i, int j) const;
    // coefficients of y^i as a dense vector in w (empty when absent)
    std::vector<RatFunc> ycoeff(int i) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly scaled(const RatFunc& s) const;

    bool operator==(const BiPoly& o) const { return c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    // true when the y-leading coefficient is the constant 1
    bool is_y_monic() const;

    // Division in y: *this = q*p + r with the y-degree of r below that of p.
    // p must be y-monic of positive y-degree, or y-free with every division
    // of the w-coefficients exact or remaindered in w.
    static void divrem_y(const BiPoly& num, const BiPoly& den, BiPoly& q, BiPoly& r);

    // Terms in descending y-degree, then descending w-degree:
    // "y^2 - t*w", "2*y*w^2 + 1/t"
    std::string str() const;

private:
    void trim();
    // c_[i][j] = coefficient of y^i w^j
    std::vector<std::vector<RatFunc>> c_;
};

// The relation P(y, w) = 0 carried along x' = a*x: y' = a*y and w' = 0.
struct LiftedRelation {
    BiPoly relation;
    RatFunc a;
};

// Apply the derivation: d/dt on coefficients plus a*y*d/dy; w is constant.
BiPoly total_derivative(const BiPoly& p, const RatFunc& a);
BiPoly total_derivative(const LiftedRelation& lift);

// Exact division certificate for closure of the relation ideal under the
// derivation: the quotient when the derivative lies in (P), else the
// non-zero remainder.
struct DInvariance {
    bool invariant = false;
    BiPoly quotient;
    BiPoly remainder;
};
DInvariance is_d_invariant(const LiftedRelation& lift);  // ZeroInput on P = 0

// y^n - w*f for a Kummer classification, with a = (1/n) f'/f; verified
// d-invariant before returning. Throws NotKummer on other variants.
LiftedRelation minimal_lift_rank_one(const RankOneClassification& cl);

// Disjointness of the relations specialized at w = c1 and w = c2: the
// y-resultant of y^n - c1*f and y^n - c2*f equals (c1-c2)^n * f^n, non-zero
// exactly when c1 != c2. Both lifts must share the y^n - w*f shape.
struct Disjointness {
    bool disjoint = false;
    long n = 0;
    RatFunc f;
    RealAlgebraic scalar_part;  // (c1 - c2)^n
    RatFunc function_part;      // f^n
};
Disjointness disjoint_lifts(const LiftedRelation& l1, const RealAlgebraic& c1,
                            const LiftedRelation& l2, const RealAlgebraic& c2);

} // namespace pvg
