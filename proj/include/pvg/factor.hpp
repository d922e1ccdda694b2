#ifndef PVG_FACTOR_HPP
#define PVG_FACTOR_HPP

#include <utility>
#include <vector>

#include "pvg/poly.hpp"

namespace pvg {

// Complete factorization over Q: p == unit * prod factor^multiplicity with
// every factor monic and irreducible over Q. Factors are sorted by degree,
// then lexicographically on coefficients from the top term down, so equal
// inputs always produce the identical factor list.
struct Factorization {
    Rational unit;
    std::vector<std::pair<Poly, int>> factors;
};

// Throws ZeroPolynomial on zero input. Constants factor as a bare unit.
Factorization factor_rational(const Poly& p);

// True for polynomials of degree >= 1 that are irreducible over Q; false for
// constants. Throws ZeroPolynomial on zero input.
bool is_irreducible(const Poly& p);

} // namespace pvg

#endif
