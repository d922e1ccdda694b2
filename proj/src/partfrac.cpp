#include "pvg/partfrac.hpp"

#include "pvg/errors.hpp"
#include "pvg/factor.hpp"

namespace pvg {

PartialFractions partial_fractions(const RatFunc& f) {
    PartialFractions out;
    if (f.den().deg() > 32)
        throw UnsupportedInput("denominator degree above the supported bound of 32");
    Poly rem;
    Poly::divrem(f.num(), f.den(), out.polynomial, rem);
    if (rem.is_zero()) return out;

    const Factorization fac = factor_rational(f.den());
    for (const auto& [p, e] : fac.factors) {
        const Poly pe = p.pow(e);
        const Poly cofactor = Poly::exact_div(f.den(), pe);
        // component of rem/den over this prime power: rem * cofactor^(-1) mod p^e
        Poly local;
        {
            Poly q, r;
            Poly::divrem(rem, pe, q, r);
            if (cofactor.is_one()) {
                local = r;
            } else {
                const ExtGcd bez = poly_ext_gcd(cofactor, pe);
                if (!bez.g.is_one()) throw InternalError("denominator cofactors not coprime");
                Poly qq, rr;
                Poly::divrem(r * bez.u, pe, qq, rr);
                local = rr;
            }
        }
        // digits of local base p give the numerators for powers e, e-1, ...
        int power = e;
        Poly cur = local;
        while (!cur.is_zero() && power >= 1) {
            Poly q, digit;
            Poly::divrem(cur, p, q, digit);
            if (!digit.is_zero())
                out.terms.push_back({p, power, digit});
            cur = std::move(q);
            --power;
        }
        if (!cur.is_zero()) throw InternalError("digit expansion overflow");
    }
    // factor loop emits powers high to low; canonical order is ascending
    for (std::size_t i = 0, j = 0; i < out.terms.size(); i = j) {
        j = i;
        while (j < out.terms.size() && out.terms[j].base == out.terms[i].base) ++j;
        for (std::size_t a = i, b = j - 1; a < b; ++a, --b)
            std::swap(out.terms[a], out.terms[b]);
    }
    return out;
}

RatFunc recombine(const PartialFractions& pf) {
    RatFunc acc(pf.polynomial);
    for (const auto& term : pf.terms)
        acc += RatFunc(term.numerator, term.base.pow(term.power));
    return acc;
}

} // namespace pvg
