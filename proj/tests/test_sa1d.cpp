#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pvg/errors.hpp"
#include "pvg/sa1d.hpp"

using namespace pvg;

namespace {

RealAlgebraic sqrt_of(long v) {
    return *nth_root(RealAlgebraic(Rational(v)), 2);
}

RealAlgebraic q(long n, long d = 1) { return RealAlgebraic(Rational(n, d)); }

using Set = SemialgebraicSet1D;

} // namespace

TEST_CASE("construction and canonical printing") {
    CHECK(Set::empty().str() == "{}");
    CHECK(Set::empty().is_empty());
    CHECK(Set::whole_line().str() == "(-inf, +inf)");
    CHECK(Set::point(q(1)).str() == "{1}");
    CHECK(Set::open_interval(q(0), q(1)).str() == "(0, 1)");
    CHECK(Set::less_than(q(0)).str() == "(-inf, 0)");
    CHECK(Set::greater_than(q(-1, 2)).str() == "(-1/2, +inf)");

    CHECK(Set::open_interval(q(1), q(1)).is_empty());
    CHECK(Set::open_interval(q(2), q(1)).is_empty());
}

TEST_CASE("membership") {
    const Set iv = Set::open_interval(q(1), q(2));
    CHECK(iv.contains(q(3, 2)));
    CHECK(iv.contains(sqrt_of(2)));
    CHECK(!iv.contains(q(1)));
    CHECK(!iv.contains(q(2)));
    CHECK(!iv.contains(q(5)));

    CHECK(Set::point(sqrt_of(2)).contains(sqrt_of(2)));
    CHECK(!Set::point(sqrt_of(2)).contains(q(7, 5)));
    CHECK(Set::whole_line().contains(sqrt_of(3)));
    CHECK(!Set::empty().contains(q(0)));
}

TEST_CASE("intersection of half lines") {
    const Set a = Set::greater_than(q(0));
    const Set b = Set::less_than(q(1));
    const Set got = a.intersect_with(b);
    CHECK(got == Set::open_interval(q(0), q(1)));
    CHECK(got.str() == "(0, 1)");

    const auto w = got.witness();
    REQUIRE(w.has_value());
    CHECK(*w == q(1, 2));
}

TEST_CASE("complement of the line is empty") {
    CHECK(Set::whole_line().complement() == Set::empty());
    CHECK(Set::empty().complement() == Set::whole_line());
}

TEST_CASE("punctured line") {
    const Set s = Set::greater_than(q(0)).union_with(Set::less_than(q(0)));
    CHECK(s == Set::point(q(0)).complement());
    CHECK(s.components().size() == 2);
    CHECK(!s.contains(q(0)));
    CHECK(s.contains(q(5)));
    CHECK(s.contains(q(-5)));

    const auto w = s.witness();
    REQUIRE(w.has_value());
    CHECK(s.contains(*w));
}

TEST_CASE("point absorbed between intervals") {
    const Set merged = Set::open_interval(q(0), q(1))
                           .union_with(Set::point(q(1)))
                           .union_with(Set::open_interval(q(1), q(2)));
    CHECK(merged == Set::open_interval(q(0), q(2)));
    CHECK(merged.components().size() == 1);

    // without the middle point the pieces stay apart
    const Set gap = Set::open_interval(q(0), q(1))
                        .union_with(Set::open_interval(q(1), q(2)));
    CHECK(gap.components().size() == 2);
    CHECK(!gap.contains(q(1)));

    // a half-open union is not representable as one open interval
    const Set half = Set::open_interval(q(0), q(1)).union_with(Set::point(q(1)));
    CHECK(half.components().size() == 2);
    CHECK(half.contains(q(1)));

    const Set chain = Set::open_interval(q(0), q(1))
                          .union_with(Set::point(q(1)))
                          .union_with(Set::open_interval(q(1), q(2)))
                          .union_with(Set::point(q(2)))
                          .union_with(Set::open_interval(q(2), q(3)));
    CHECK(chain == Set::open_interval(q(0), q(3)));
}

TEST_CASE("irrational endpoints") {
    const RealAlgebraic r2 = sqrt_of(2);
    const Set sym = Set::open_interval(-r2, r2);
    CHECK(sym.contains(q(0)));
    CHECK(sym.contains(q(7, 5)));
    CHECK(!sym.contains(r2));

    CHECK(sym.intersect_with(Set::greater_than(q(0))) ==
          Set::open_interval(q(0), r2));

    const Set co = sym.complement();
    CHECK(co.components().size() == 4);
    CHECK(co.contains(r2));
    CHECK(co.contains(-r2));
    CHECK(!co.contains(q(0)));
    CHECK(co.contains(q(100)));

    // endpoint equality is value equality, however the endpoint was isolated
    const RealAlgebraic wide = RealAlgebraic::from_root(
        Poly::t() * Poly::t() - Poly(2), Rational(0), Rational(100));
    CHECK(Set::open_interval(q(0), wide) == Set::open_interval(q(0), r2));
}

TEST_CASE("witnesses are members") {
    std::vector<Set> sets = {
        Set::whole_line(),
        Set::point(sqrt_of(2)),
        Set::greater_than(q(5)),
        Set::less_than(q(-3)),
        Set::open_interval(q(1, 2), q(3, 4)),
        Set::open_interval(-sqrt_of(2), sqrt_of(2)),
        Set::greater_than(sqrt_of(3)),
        Set::point(q(0)).complement(),
    };
    for (const Set& s : sets) {
        const auto w = s.witness();
        REQUIRE(w.has_value());
        CHECK(s.contains(*w));
    }
    CHECK(!Set::empty().witness().has_value());
}

TEST_CASE("boolean algebra laws on random sets") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<int> pieces(1, 3);

    auto rand_value = [&]() -> RealAlgebraic {
        if (kind(rng) == 0) {
            const int base = 2 + (num(rng) & 1);
            return sqrt_of(base) * RealAlgebraic(Rational(den(rng)));
        }
        return RealAlgebraic(Rational(num(rng), den(rng)));
    };
    auto rand_set = [&]() -> Set {
        Set s = Set::empty();
        const int n = pieces(rng);
        for (int i = 0; i < n; ++i) {
            const RealAlgebraic a = rand_value();
            switch (kind(rng)) {
                case 0: s = s.union_with(Set::point(a)); break;
                case 1: s = s.union_with(Set::less_than(a)); break;
                case 2: s = s.union_with(Set::greater_than(a)); break;
                default: {
                    const RealAlgebraic b = rand_value();
                    if (RealAlgebraic::compare(a, b) < 0)
                        s = s.union_with(Set::open_interval(a, b));
                    else
                        s = s.union_with(Set::open_interval(b, a));
                }
            }
        }
        return s;
    };

    for (int it = 0; it < 25; ++it) {
        const Set a = rand_set();
        const Set b = rand_set();

        CHECK(a.union_with(a) == a);
        CHECK(a.intersect_with(a) == a);
        CHECK(a.complement().complement() == a);
        CHECK(a.union_with(a.complement()) == Set::whole_line());
        CHECK(a.intersect_with(a.complement()) == Set::empty());
        CHECK(a.union_with(b) == b.union_with(a));
        CHECK(a.union_with(b).complement() ==
              a.complement().intersect_with(b.complement()));
        CHECK(a.intersect_with(b).complement() ==
              a.complement().union_with(b.complement()));

        for (int probe = 0; probe < 4; ++probe) {
            const RealAlgebraic x = rand_value();
            CHECK(a.union_with(b).contains(x) == (a.contains(x) || b.contains(x)));
            CHECK(a.intersect_with(b).contains(x) == (a.contains(x) && b.contains(x)));
            CHECK(a.complement().contains(x) == !a.contains(x));
        }
    }
}
