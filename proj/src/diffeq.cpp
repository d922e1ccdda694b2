#include "pvg/diffeq.hpp"

#include <map>
#include <sstream>

#include "pvg/errors.hpp"
#include "pvg/partfrac.hpp"

namespace pvg {

namespace {

// N = r*p' for some rational r, or nothing. p is irreducible, so p' != 0.
std::optional<Rational> proportionality(const Poly& numerator, const Poly& dp) {
    const Rational r = numerator.lc() / dp.lc();
    if (numerator == dp.scaled(r)) return r;
    return std::nullopt;
}

long lcm_of_denominators(const std::vector<std::pair<Poly, Rational>>& residues) {
    Integer l(1);
    for (const auto& [p, r] : residues)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
    if (!l.fits_slong_p()) throw UnsupportedInput("root order does not fit a machine word");
    return l.get_si();
}

// prod p^(s*r) over the residues; every s*r must be an integer.
RatFunc residue_power_product(const std::vector<std::pair<Poly, Rational>>& residues,
                              long s) {
    RatFunc f(Poly(1));
    for (const auto& [p, r] : residues) {
        const Rational e = Rational(s) * r;
        if (e.den() != 1) throw InternalError("non-integral exponent in power product");
        if (!Integer(e.num()).fits_slong_p())
            throw UnsupportedInput("power product exponent does not fit a machine word");
        f *= RatFunc(p).pow(e.num().get_si());
    }
    return f;
}

} // namespace

std::string equation_str(const LinearODE& eq) {
    const std::string c = eq.coeff.str();
    if (eq.kind == LinearODE::Kind::Quadrature) return "x' = " + c;
    const bool wrap = c.find(' ') != std::string::npos;
    return "x' = " + (wrap ? "(" + c + ")" : c) + " * x";
}

RankOneClassification classify_rank_one(const LinearODE& eq) {
    if (eq.kind != LinearODE::Kind::Homogeneous)
        throw ShapeMismatch("expected a homogeneous first order equation");
    const RatFunc& a = eq.coeff;
    if (a.is_zero()) return InField{RatFunc(Poly(1))};

    const PartialFractions pf = partial_fractions(a);
    if (!pf.polynomial.is_zero()) return MultiplicativeTranscendental{};

    std::vector<std::pair<Poly, Rational>> residues;
    for (const PartialFractionTerm& term : pf.terms) {
        if (term.power >= 2) return MultiplicativeTranscendental{};
        const auto r = proportionality(term.numerator, term.base.derivative());
        if (!r) return MultiplicativeTranscendental{};
        residues.emplace_back(term.base, *r);
    }

    const long n = lcm_of_denominators(residues);
    if (n > 4096) throw UnsupportedInput("root order exceeds the supported bound of 4096");
    if (n == 1) return InField{residue_power_product(residues, 1)};
    return Kummer{n, residue_power_product(residues, n), std::move(residues)};
}

RankOneClassification classify_quadrature(const LinearODE& eq) {
    if (eq.kind != LinearODE::Kind::Quadrature)
        throw ShapeMismatch("expected a quadrature");
    const RatFunc& g = eq.coeff;
    if (g.is_zero()) return InField{RatFunc()};

    const PartialFractions pf = partial_fractions(g);

    RatFunc h;
    for (int k = 0; k <= pf.polynomial.deg(); ++k)
        h += RatFunc(Poly::monomial(k + 1, pf.polynomial[k] / Rational(k + 1)));

    // reduce each denominator prime from its top power down, carrying the
    // leftover numerator; a non-zero carry at power 1 is a true residue
    std::map<std::size_t, std::map<int, Poly>> by_base;
    std::vector<Poly> bases;
    for (const PartialFractionTerm& term : pf.terms) {
        std::size_t idx = bases.size();
        for (std::size_t i = 0; i < bases.size(); ++i)
            if (bases[i] == term.base) { idx = i; break; }
        if (idx == bases.size()) bases.push_back(term.base);
        by_base[idx][term.power] = term.numerator;
    }

    for (std::size_t i = 0; i < bases.size(); ++i) {
        const Poly& p = bases[i];
        const Poly dp = p.derivative();
        const auto& numerators = by_base[i];
        const int top = numerators.rbegin()->first;

        const ExtGcd bez = poly_ext_gcd(p, dp);
        if (!bez.g.is_one()) throw InternalError("irreducible base shares a root with its derivative");

        Poly carry;
        for (int e = top; e >= 2; --e) {
            Poly cur = carry;
            if (auto it = numerators.find(e); it != numerators.end()) cur += it->second;
            if (cur.is_zero()) { carry = Poly(); continue; }
            // cur = u*p + w*p' with deg w < deg p
            Poly q, w;
            Poly::divrem(cur * bez.v, p, q, w);
            const Poly u = Poly::exact_div(cur - w * dp, p);
            const Rational inv(1, e - 1);
            h += RatFunc(w.scaled(-inv), p.pow(e - 1));
            carry = u + w.derivative().scaled(inv);
        }
        Poly residue = carry;
        if (auto it = numerators.find(1); it != numerators.end()) residue += it->second;
        if (!residue.is_zero()) return AdditiveTranscendental{};
    }
    return InField{h};
}

std::string PVPresentation::group_str() const {
    switch (group) {
        case GaloisGroup::MuN: return "mu_" + std::to_string(group_order);
        case GaloisGroup::Gm: return "G_m";
        case GaloisGroup::Ga: return "G_a";
        case GaloisGroup::Trivial: return "trivial";
    }
    throw InternalError("unreachable group tag");
}

namespace {

// only multi-term renderings (they contain spaces) can misread after a minus
std::string wrap_term(const std::string& s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

} // namespace

std::string PVPresentation::relation_str() const {
    if (!algebraic) return "transcendental";
    std::ostringstream out;
    out << "y";
    if (n != 1) out << "^" << n;
    if (c.is_rational()) {
        const RatFunc cf = f * RatFunc(Poly(c.rational_value()));
        if (cf.is_zero()) return out.str();
        std::string s = cf.str();
        if (!s.empty() && s[0] == '-') {
            out << " + " << wrap_term(s.substr(1));
        } else {
            out << " - " << wrap_term(s);
        }
        return out.str();
    }
    out << " - " << wrap_term(c.str()) << "*" << wrap_term(f.str());
    return out.str();
}

RealAlgebraic InvariantMap::apply(const PVPresentation& pres) const {
    if (!pres.algebraic || pres.n != n || !(pres.f == f))
        throw ShapeMismatch("presentation does not match the invariant map");
    return pres.c;
}

std::string InvariantMap::str() const {
    std::ostringstream out;
    out << "y -> y";
    if (n != 1) out << "^" << n;
    out << "/" << wrap_term(f.str());
    return out.str();
}

InvariantMap invariant_map(const RankOneClassification& cl) {
    const Kummer* k = std::get_if<Kummer>(&cl);
    if (!k) throw NotKummer();
    return InvariantMap{k->n, k->f};
}

PVPresentation pv_presentation(const RankOneClassification& cl,
                               const std::optional<RealAlgebraic>& c) {
    PVPresentation out;
    if (const Kummer* k = std::get_if<Kummer>(&cl)) {
        if (!c) throw ShapeMismatch("a constant is required for the algebraic case");
        if (c->is_zero()) throw ZeroObjectPoint();
        out.algebraic = true;
        out.n = k->n;
        out.c = *c;
        out.f = k->f;
        if (k->n == 1) {
            out.group = GaloisGroup::Trivial;
        } else {
            out.group = GaloisGroup::MuN;
            out.group_order = k->n;
        }
        return out;
    }
    if (std::holds_alternative<MultiplicativeTranscendental>(cl)) {
        out.group = GaloisGroup::Gm;
        return out;
    }
    if (std::holds_alternative<AdditiveTranscendental>(cl)) {
        out.group = GaloisGroup::Ga;
        return out;
    }
    const InField& inf = std::get<InField>(cl);
    out.algebraic = true;
    out.n = 1;
    out.c = RealAlgebraic(Rational(1));
    out.f = inf.solution;
    out.group = GaloisGroup::Trivial;
    return out;
}

} // namespace pvg
