#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pvg/ratfunc.hpp"
#include "pvg/realalg.hpp"

namespace pvg {

// A first order equation over the rational function field: either x' = a*x
// or a bare quadrature x' = g.
struct LinearODE {
    enum class Kind { Homogeneous, Quadrature };
    Kind kind = Kind::Homogeneous;
    RatFunc coeff;

    static LinearODE homogeneous(RatFunc a) {
        return {Kind::Homogeneous, std::move(a)};
    }
    static LinearODE quadrature(RatFunc g) {
        return {Kind::Quadrature, std::move(g)};
    }
};

// x' = a*x has the solution y with y^n = c*f, c a non-zero constant:
// a = (1/n) f'/f with n minimal. residues lists each monic irreducible
// denominator prime p with its rational multiplier r in a = sum r*p'/p,
// so f = prod p^(n*r) and n = lcm of the r denominators; n >= 2 here,
// n = 1 collapses to InField.
struct Kummer {
    long n = 0;
    RatFunc f;
    std::vector<std::pair<Poly, Rational>> residues;
};

// solution is exp of a non-quadrature integral: y'/y = a has no algebraic
// relation over the field
struct MultiplicativeTranscendental {};

// antiderivative does not exist in the field (a logarithm appears)
struct AdditiveTranscendental {};

// solved inside the field: x = c*solution (homogeneous) or
// x = solution + c (quadrature)
struct InField {
    RatFunc solution;
};

using RankOneClassification =
    std::variant<Kummer, MultiplicativeTranscendental, AdditiveTranscendental, InField>;

// Decide which case x' = a*x falls into. a = 0 gives InField(1); integer
// residue vectors give InField(prod p^r); rational non-integer residues give
// Kummer; anything else (non-zero polynomial part, higher-order poles,
// non-proportional simple-pole numerators) is MultiplicativeTranscendental.
// Throws ShapeMismatch for a quadrature input.
// Canonical rendering: "x' = <a> * x" (coefficient parenthesized when it is
// a sum) or "x' = <g>". Re-parsing the result reproduces the equation.
std::string equation_str(const LinearODE& eq);

RankOneClassification classify_rank_one(const LinearODE& eq);

// Decide whether x' = g integrates inside the field. Runs the full pole-order
// reduction, so only true residues obstruct: InField(h) with h' = g exactly,
// or AdditiveTranscendental when some reduced simple-pole numerator survives.
// Throws ShapeMismatch for a homogeneous input.
RankOneClassification classify_quadrature(const LinearODE& eq);

enum class GaloisGroup { MuN, Gm, Ga, Trivial };

// Concrete presentation of the solution extension: an algebraic generator
// relation y^n = c*f (y-monic of degree n), or a transcendental generator.
struct PVPresentation {
    bool algebraic = false;
    long n = 0;            // y-degree of the relation when algebraic
    RealAlgebraic c;       // constant factor when algebraic
    RatFunc f;
    GaloisGroup group = GaloisGroup::Trivial;
    long group_order = 0;  // root order when group == MuN

    std::string relation_str() const;  // "y^2 - t", "transcendental"
    std::string group_str() const;     // "mu_2", "G_m", "G_a", "trivial"
};

// The map y -> y^n/f separating the solutions of a Kummer equation: applied
// to a presentation y^n = c*f it recovers c.
struct InvariantMap {
    long n = 0;
    RatFunc f;

    RealAlgebraic apply(const PVPresentation& pres) const;  // ShapeMismatch
    std::string str() const;                                // "y -> y^2/t"
};

// Throws NotKummer unless cl holds the Kummer alternative.
InvariantMap invariant_map(const RankOneClassification& cl);

// Package a classification as a presentation at the constant c. c is
// required for the Kummer case (ZeroObjectPoint when 0, ShapeMismatch when
// absent) and ignored otherwise.
PVPresentation pv_presentation(const RankOneClassification& cl,
                               const std::optional<RealAlgebraic>& c = std::nullopt);

} // namespace pvg
