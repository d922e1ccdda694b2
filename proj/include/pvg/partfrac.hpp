#ifndef PVG_PARTFRAC_HPP
#define PVG_PARTFRAC_HPP

#include <vector>

#include "pvg/ratfunc.hpp"

namespace pvg {

// One term numerator / base^power with base monic irreducible and
// deg numerator < deg base; numerator is non-zero.
struct PartialFractionTerm {
    Poly base;
    int power = 1;
    Poly numerator;
};

// f == polynomial + sum of terms. Terms are ordered by base (degree, then
// coefficients) and ascending power, so the decomposition is canonical.
struct PartialFractions {
    Poly polynomial;
    std::vector<PartialFractionTerm> terms;
};

// Complete decomposition over the irreducible factors of the denominator.
// Throws UnsupportedInput when the denominator degree exceeds 32, the
// guaranteed envelope for exact factorization here.
PartialFractions partial_fractions(const RatFunc& f);

// Exact inverse of the decomposition.
RatFunc recombine(const PartialFractions& pf);

} // namespace pvg

#endif
