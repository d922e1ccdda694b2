#include "pvg/sa1d.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pvg/errors.hpp"

namespace pvg {

namespace {

bool endpoint_eq(const std::optional<RealAlgebraic>& a,
                 const std::optional<RealAlgebraic>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return RealAlgebraic::compare(*a, *b) == 0;
}

// All endpoint and point values of both sets, ascending, without duplicates.
std::vector<RealAlgebraic> breakpoints_of(const SemialgebraicSet1D& a,
                                          const SemialgebraicSet1D& b) {
    std::vector<RealAlgebraic> pts;
    auto collect = [&](const SemialgebraicSet1D& s) {
        for (const SaComponent& c : s.components()) {
            if (const auto* p = std::get_if<SaPoint>(&c)) {
                pts.push_back(p->value);
            } else {
                const auto& iv = std::get<SaInterval>(c);
                if (iv.lo) pts.push_back(*iv.lo);
                if (iv.hi) pts.push_back(*iv.hi);
            }
        }
    };
    collect(a);
    collect(b);
    std::sort(pts.begin(), pts.end(),
              [](const RealAlgebraic& x, const RealAlgebraic& y) { return x < y; });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const RealAlgebraic& x, const RealAlgebraic& y) {
                              return RealAlgebraic::compare(x, y) == 0;
                          }),
              pts.end());
    return pts;
}

// The line splits at k breakpoints into 2k+1 elementary regions, listed left
// to right: region 2i is the open interval (b[i-1], b[i]) with b[-1] = -inf
// and b[k] = +inf, region 2i+1 is the point b[i].
RealAlgebraic region_sample(const std::vector<RealAlgebraic>& b, std::size_t r) {
    if (r % 2 == 1) return b[r / 2];
    const std::size_t i = r / 2;
    if (b.empty()) return RealAlgebraic();
    if (i == 0) return RealAlgebraic(rational_below(b.front()));
    if (i == b.size()) return RealAlgebraic(rational_above(b.back()));
    return RealAlgebraic(rational_between(b[i - 1], b[i]));
}

// Rebuild a canonical component list from the selected elementary regions.
std::vector<SaComponent> assemble(const std::vector<RealAlgebraic>& b,
                                  const std::vector<bool>& sel) {
    std::vector<SaComponent> out;
    const std::size_t last = 2 * b.size();
    std::size_t r = 0;
    while (r <= last) {
        if (r % 2 == 0 && sel[r]) {
            std::size_t j = r;
            while (j + 2 <= last && sel[j + 1] && sel[j + 2]) j += 2;
            SaInterval iv;
            if (r != 0) iv.lo = b[r / 2 - 1];
            if (j != last) iv.hi = b[j / 2];
            out.push_back(iv);
            r = j + 1;
        } else if (r % 2 == 1 && sel[r]) {
            out.push_back(SaPoint{b[r / 2]});
            ++r;
        } else {
            ++r;
        }
    }
    return out;
}

// Membership of each elementary region decides the op; assemble() then
// restores the canonical component list.
std::vector<SaComponent> combined(const SemialgebraicSet1D& a,
                                  const SemialgebraicSet1D& b,
                                  const std::function<bool(bool, bool)>& op) {
    const std::vector<RealAlgebraic> pts = breakpoints_of(a, b);
    std::vector<bool> sel(2 * pts.size() + 1);
    for (std::size_t r = 0; r < sel.size(); ++r) {
        const RealAlgebraic s = region_sample(pts, r);
        sel[r] = op(a.contains(s), b.contains(s));
    }
    return assemble(pts, sel);
}

} // namespace

SemialgebraicSet1D SemialgebraicSet1D::empty() { return SemialgebraicSet1D(); }

SemialgebraicSet1D SemialgebraicSet1D::whole_line() {
    return open_interval(std::nullopt, std::nullopt);
}

SemialgebraicSet1D SemialgebraicSet1D::point(RealAlgebraic v) {
    SemialgebraicSet1D s;
    s.components_.push_back(SaPoint{std::move(v)});
    return s;
}

SemialgebraicSet1D SemialgebraicSet1D::open_interval(std::optional<RealAlgebraic> lo,
                                                     std::optional<RealAlgebraic> hi) {
    if (lo && hi && RealAlgebraic::compare(*lo, *hi) >= 0) return empty();
    SemialgebraicSet1D s;
    s.components_.push_back(SaInterval{std::move(lo), std::move(hi)});
    return s;
}

SemialgebraicSet1D SemialgebraicSet1D::less_than(RealAlgebraic r) {
    return open_interval(std::nullopt, std::move(r));
}

SemialgebraicSet1D SemialgebraicSet1D::greater_than(RealAlgebraic r) {
    return open_interval(std::move(r), std::nullopt);
}

bool SemialgebraicSet1D::contains(const RealAlgebraic& x) const {
    for (const SaComponent& c : components_) {
        if (const auto* p = std::get_if<SaPoint>(&c)) {
            if (RealAlgebraic::compare(p->value, x) == 0) return true;
        } else {
            const auto& iv = std::get<SaInterval>(c);
            const bool above = !iv.lo || RealAlgebraic::compare(*iv.lo, x) < 0;
            const bool below = !iv.hi || RealAlgebraic::compare(x, *iv.hi) < 0;
            if (above && below) return true;
        }
    }
    return false;
}

SemialgebraicSet1D SemialgebraicSet1D::union_with(const SemialgebraicSet1D& other) const {
    SemialgebraicSet1D out;
    out.components_ = combined(*this, other, [](bool x, bool y) { return x || y; });
    return out;
}

SemialgebraicSet1D SemialgebraicSet1D::intersect_with(const SemialgebraicSet1D& other) const {
    SemialgebraicSet1D out;
    out.components_ = combined(*this, other, [](bool x, bool y) { return x && y; });
    return out;
}

SemialgebraicSet1D SemialgebraicSet1D::complement() const {
    SemialgebraicSet1D out;
    out.components_ = combined(*this, empty(), [](bool x, bool) { return !x; });
    return out;
}

std::optional<RealAlgebraic> SemialgebraicSet1D::witness() const {
    if (components_.empty()) return std::nullopt;
    const SaComponent& c = components_.front();
    if (const auto* p = std::get_if<SaPoint>(&c)) return p->value;
    const auto& iv = std::get<SaInterval>(c);
    if (!iv.lo && !iv.hi) return RealAlgebraic();
    if (!iv.lo) return RealAlgebraic(rational_below(*iv.hi));
    if (!iv.hi) return RealAlgebraic(rational_above(*iv.lo));
    return RealAlgebraic(rational_between(*iv.lo, *iv.hi));
}

bool SemialgebraicSet1D::operator==(const SemialgebraicSet1D& other) const {
    if (components_.size() != other.components_.size()) return false;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const SaComponent& x = components_[i];
        const SaComponent& y = other.components_[i];
        if (x.index() != y.index()) return false;
        if (const auto* p = std::get_if<SaPoint>(&x)) {
            if (RealAlgebraic::compare(p->value, std::get<SaPoint>(y).value) != 0)
                return false;
        } else {
            const auto& ia = std::get<SaInterval>(x);
            const auto& ib = std::get<SaInterval>(y);
            if (!endpoint_eq(ia.lo, ib.lo) || !endpoint_eq(ia.hi, ib.hi)) return false;
        }
    }
    return true;
}

std::string SemialgebraicSet1D::str() const {
    if (components_.empty()) return "{}";
    std::ostringstream out;
    bool first = true;
    for (const SaComponent& c : components_) {
        if (!first) out << " u ";
        first = false;
        if (const auto* p = std::get_if<SaPoint>(&c)) {
            out << "{" << p->value.str() << "}";
        } else {
            const auto& iv = std::get<SaInterval>(c);
            out << "(" << (iv.lo ? iv.lo->str() : "-inf") << ", "
                << (iv.hi ? iv.hi->str() : "+inf") << ")";
        }
    }
    return out.str();
}

} // namespace pvg
