#include "pvg/groupoid.hpp"

#include "pvg/errors.hpp"

namespace pvg {

std::string TheorySpec::str() const {
    if (kind == Kind::Fields) return "fields";
    return "ordered fields, " + cut.str();
}

GroupoidDescriptor build_groupoid(const RankOneClassification& cl) {
    if (const Kummer* k = std::get_if<Kummer>(&cl)) return KummerGroupoid{k->n, k->f};
    if (std::holds_alternative<MultiplicativeTranscendental>(cl))
        return SingleObjectTorsor{GaloisGroup::Gm};
    if (std::holds_alternative<AdditiveTranscendental>(cl))
        return SingleObjectTorsor{GaloisGroup::Ga};
    return TrivialGroupoid{};
}

RatFunc tautological_point(const KummerGroupoid& gd) {
    return RatFunc(Poly(1)) / gd.f;
}

bool ObjectSet::operator==(const ObjectSet& o) const {
    if (singleton != o.singleton) return false;
    return singleton || set == o.set;
}

std::string ObjectSet::str() const { return singleton ? "{*}" : set.str(); }

namespace {

SemialgebraicSet1D punctured_line() {
    return SemialgebraicSet1D::point(RealAlgebraic()).complement();
}

} // namespace

ObjectSet restrict_objects(const GroupoidDescriptor& gd, const TheorySpec& th) {
    const KummerGroupoid* k = std::get_if<KummerGroupoid>(&gd);
    if (!k) return ObjectSet{true, {}};

    ObjectSet out;
    if (th.kind == TheorySpec::Kind::Fields || k->n % 2 == 1) {
        out.set = punctured_line();
        return out;
    }
    // even root order: y^n = c*f forces c*f > 0 under the ordering
    const int s = sign_at_cut(k->f, th.cut);
    if (s == 0) throw InternalError("object family over an identically zero function");
    out.set = s > 0 ? SemialgebraicSet1D::greater_than(RealAlgebraic())
                    : SemialgebraicSet1D::less_than(RealAlgebraic());
    return out;
}

namespace {

// Smallest-height rational member of s: height of p/q in lowest terms is
// max(|p|, q); ties scan denominators upward, small numerators first,
// positive before negative. Falls back to the set's own witness.
RealAlgebraic canonical_member(const SemialgebraicSet1D& s) {
    for (long h = 1; h <= 32; ++h) {
        for (long den = 1; den <= h; ++den) {
            for (long num = 1; num <= h; ++num) {
                if (std::max(num, den) != h) continue;
                const Rational r(num, den);
                if (r.num() != num || r.den() != den) continue;  // not lowest terms
                if (s.contains(RealAlgebraic(r))) return RealAlgebraic(r);
                if (s.contains(RealAlgebraic(-r))) return RealAlgebraic(-r);
            }
        }
    }
    const auto w = s.witness();
    if (!w) throw InternalError("existence witness requested for an empty object set");
    return *w;
}

} // namespace

ExistenceResult existence_witness(const RankOneClassification& cl,
                                  const TheorySpec& th) {
    ExistenceResult out;
    const GroupoidDescriptor gd = build_groupoid(cl);
    if (std::holds_alternative<KummerGroupoid>(gd)) {
        const ObjectSet objects = restrict_objects(gd, th);
        const RealAlgebraic c = canonical_member(objects.set);
        out.witness_c = c;
        out.presentation = pv_presentation(cl, c);
        return out;
    }
    out.presentation = pv_presentation(cl);
    return out;
}

std::optional<RealAlgebraic> morphism_solvable(const KummerGroupoid& gd,
                                               const RealAlgebraic& p,
                                               const RealAlgebraic& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroObjectPoint();
    return nth_root(p / q, static_cast<int>(gd.n));
}

IsoClasses iso_classes(const GroupoidDescriptor& gd, const TheorySpec& th) {
    IsoClasses out;
    const KummerGroupoid* k = std::get_if<KummerGroupoid>(&gd);
    if (!k) return out;

    if (k->n % 2 == 1) {
        out.representatives = {canonical_member(restrict_objects(gd, th).set)};
        return out;
    }
    if (th.kind == TheorySpec::Kind::Fields) {
        // two sign components, never connected by an even root
        out.count = 2;
        out.representatives = {RealAlgebraic(Rational(1)), RealAlgebraic(Rational(-1))};
        return out;
    }
    out.representatives = {canonical_member(restrict_objects(gd, th).set)};
    return out;
}

std::string UniquenessVerdict::str() const {
    return unique ? "unique" : "classes(" + std::to_string(classes) + ")";
}

UniquenessVerdict uniqueness_verdict(const GroupoidDescriptor& gd,
                                     const TheorySpec& th) {
    const IsoClasses classes = iso_classes(gd, th);
    UniquenessVerdict out;
    out.unique = classes.count == 1;
    out.classes = classes.count;
    out.representatives = classes.representatives;
    return out;
}

bool groupoid_axioms_check(const GroupoidDescriptor& gd,
                           const std::vector<RealAlgebraic>& samples) {
    const KummerGroupoid* k = std::get_if<KummerGroupoid>(&gd);
    if (!k) return true;
    for (const RealAlgebraic& p : samples)
        if (p.is_zero()) throw ZeroObjectPoint();

    const RealAlgebraic one(Rational(1));
    for (const RealAlgebraic& p : samples) {
        const auto idm = morphism_solvable(*k, p, p);
        if (!idm || !(*idm == one)) return false;
    }
    for (const RealAlgebraic& p : samples) {
        for (const RealAlgebraic& q : samples) {
            const auto z = morphism_solvable(*k, p, q);
            const auto zi = morphism_solvable(*k, q, p);
            if (z.has_value() != zi.has_value()) return false;
            if (!z) continue;
            if (!(*z * *zi == one)) return false;
            if (!(z->pow(k->n) * q == p)) return false;
        }
    }
    for (const RealAlgebraic& p : samples)
        for (const RealAlgebraic& q : samples)
            for (const RealAlgebraic& r : samples) {
                const auto zpq = morphism_solvable(*k, p, q);
                const auto zqr = morphism_solvable(*k, q, r);
                if (!zpq || !zqr) continue;
                const auto zpr = morphism_solvable(*k, p, r);
                if (!zpr) return false;
                if (!(*zpq * *zqr == *zpr)) return false;
            }
    return true;
}

} // namespace pvg
