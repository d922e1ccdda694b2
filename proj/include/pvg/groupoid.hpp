#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pvg/diffeq.hpp"
#include "pvg/realalg.hpp"
#include "pvg/sa1d.hpp"

namespace pvg {

// Which universal theory constrains the solution extension: plain fields, or
// ordered fields with the variable placed at a cut of the real line.
struct TheorySpec {
    enum class Kind { Fields, OrderedFields };
    Kind kind = Kind::Fields;
    Cut cut;   // meaningful for OrderedFields

    static TheorySpec fields() { return {Kind::Fields, Cut::plus_infinity()}; }
    static TheorySpec ordered_fields(Cut c) { return {Kind::OrderedFields, c}; }

    std::string str() const;  // "fields", "ordered fields, t -> 0+"
};

// Connected families of solution extensions. For the algebraic case the
// objects are constants c != 0 indexing y^n = c*f, and a morphism from p to
// q is a constant z with z^n = p/q. The transcendental cases have a single
// object whose morphisms form the group.
struct KummerGroupoid {
    long n = 0;
    RatFunc f;
};
struct SingleObjectTorsor {
    GaloisGroup group = GaloisGroup::Gm;  // Gm or Ga
};
struct TrivialGroupoid {};

using GroupoidDescriptor =
    std::variant<KummerGroupoid, SingleObjectTorsor, TrivialGroupoid>;

// Kummer -> KummerGroupoid, transcendental -> torsor, InField -> trivial.
GroupoidDescriptor build_groupoid(const RankOneClassification& cl);

// The field point 1^n/f = 1/f showing the object set is non-empty over the
// base field before any constants are adjoined.
RatFunc tautological_point(const KummerGroupoid& gd);

// Object set of a groupoid: a subset of the constants line, or one abstract
// object for the transcendental and trivial shapes.
struct ObjectSet {
    bool singleton = false;
    SemialgebraicSet1D set;   // meaningful when !singleton

    bool operator==(const ObjectSet& o) const;
    bool operator!=(const ObjectSet& o) const { return !(*this == o); }
    std::string str() const;  // "{*}" or the set rendering
};

// Fields: the full object set (punctured line for Kummer). Ordered fields:
// even n keeps only constants whose sign matches the sign of f at the cut;
// odd n keeps the whole punctured line; single-object shapes are unaffected.
ObjectSet restrict_objects(const GroupoidDescriptor& gd, const TheorySpec& th);

// A solution extension compatible with the theory: the constant c indexing
// it (algebraic case) and its presentation. exists is retained as a
// defensive contract; every supported input admits an extension.
struct ExistenceResult {
    bool exists = true;
    std::optional<RealAlgebraic> witness_c;
    PVPresentation presentation;
};
ExistenceResult existence_witness(const RankOneClassification& cl,
                                  const TheorySpec& th);

// z with z^n = p/q when it exists; p, q must be non-zero (ZeroObjectPoint).
std::optional<RealAlgebraic> morphism_solvable(const KummerGroupoid& gd,
                                               const RealAlgebraic& p,
                                               const RealAlgebraic& q);

// Partition of the restricted object set under morphism solvability.
// representatives lists one constant per class for the algebraic case and is
// empty for single-object shapes.
struct IsoClasses {
    long count = 1;
    std::vector<RealAlgebraic> representatives;
};
IsoClasses iso_classes(const GroupoidDescriptor& gd, const TheorySpec& th);

// Unique iff one isomorphism class over the restricted objects.
struct UniquenessVerdict {
    bool unique = true;
    long classes = 1;
    std::vector<RealAlgebraic> representatives;

    std::string str() const;  // "unique" or "classes(2)"
};
UniquenessVerdict uniqueness_verdict(const GroupoidDescriptor& gd,
                                     const TheorySpec& th);

// Identity, inverse, and composition checked exactly at the sample objects;
// samples must be non-zero for the algebraic case (ZeroObjectPoint).
bool groupoid_axioms_check(const GroupoidDescriptor& gd,
                           const std::vector<RealAlgebraic>& samples);

} // namespace pvg
