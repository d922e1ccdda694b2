#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pvg/realalg.hpp"

namespace pvg {

// One connected piece of a subset of the real line.
struct SaPoint {
    RealAlgebraic value;
};

// Open interval; an absent endpoint means that side is infinite.
struct SaInterval {
    std::optional<RealAlgebraic> lo;
    std::optional<RealAlgebraic> hi;
};

using SaComponent = std::variant<SaPoint, SaInterval>;

// Finite union of points and open intervals with real algebraic endpoints.
// Components are kept sorted, pairwise disjoint, and maximally merged: a
// point flanked by intervals on both sides is absorbed, so (a,b) u {b} u
// (b,c) is stored as (a,c). Equality is equality of canonical components.
// Values are immutable; all operations return new sets.
class SemialgebraicSet1D {
public:
    SemialgebraicSet1D() = default;   // empty set

    static SemialgebraicSet1D empty();
    static SemialgebraicSet1D whole_line();
    static SemialgebraicSet1D point(RealAlgebraic v);
    // Open interval; pass nullopt for an infinite end. Degenerate input
    // (lo >= hi) yields the empty set.
    static SemialgebraicSet1D open_interval(std::optional<RealAlgebraic> lo,
                                            std::optional<RealAlgebraic> hi);
    static SemialgebraicSet1D less_than(RealAlgebraic r);
    static SemialgebraicSet1D greater_than(RealAlgebraic r);

    SemialgebraicSet1D union_with(const SemialgebraicSet1D& other) const;
    SemialgebraicSet1D intersect_with(const SemialgebraicSet1D& other) const;
    SemialgebraicSet1D complement() const;

    bool contains(const RealAlgebraic& x) const;
    bool is_empty() const { return components_.empty(); }

    // A concrete member: the first point, or a rational inside the first
    // interval; absent for the empty set.
    std::optional<RealAlgebraic> witness() const;

    const std::vector<SaComponent>& components() const { return components_; }

    bool operator==(const SemialgebraicSet1D& other) const;
    bool operator!=(const SemialgebraicSet1D& other) const { return !(*this == other); }

    // "{}", or components joined by " u ": "(-inf, 0) u {1} u (2, +inf)"
    std::string str() const;

private:
    std::vector<SaComponent> components_;
};

} // namespace pvg
