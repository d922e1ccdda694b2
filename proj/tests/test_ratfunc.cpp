#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pvg/errors.hpp"
#include "pvg/partfrac.hpp"
#include "pvg/ratfunc.hpp"

using namespace pvg;

namespace {

Poly rnd_poly(std::mt19937& rng, int max_deg, int mag = 6) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> cd(-mag, mag);
    const int d = dd(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
    for (auto& x : c) x = Rational(cd(rng));
    return Poly(std::move(c));
}

Poly rnd_nonzero(std::mt19937& rng, int max_deg, int mag = 6) {
    for (;;) {
        Poly p = rnd_poly(rng, max_deg, mag);
        if (!p.is_zero()) return p;
    }
}

RatFunc rnd_ratfunc(std::mt19937& rng) {
    return RatFunc(rnd_poly(rng, 4), rnd_nonzero(rng, 4));
}

} // namespace

TEST_CASE("reduced form invariants") {
    Poly t = Poly::t();
    RatFunc f(t * t - Poly(1), (t - Poly(1)).scaled(Rational(2)));
    CHECK(f.num().str() == "1/2*t + 1/2");
    CHECK(f.den().str() == "1");
    CHECK(f.is_polynomial());

    RatFunc g(t, t * t * t);
    CHECK(g.num().is_one());
    CHECK(g.den().str() == "t^2");
    CHECK_THROWS_AS(RatFunc(t, Poly()), ZeroInput);

    CHECK(RatFunc(Poly(), t).is_zero());
    CHECK(RatFunc(Poly(), t).den().is_one());
}

TEST_CASE("field arithmetic") {
    std::mt19937 rng(5);
    for (int it = 0; it < 60; ++it) {
        RatFunc a = rnd_ratfunc(rng);
        RatFunc b = rnd_ratfunc(rng);
        RatFunc c = rnd_ratfunc(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc());
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b * b.inverse() == RatFunc(1));
        }
    }
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(), ZeroInput);
    CHECK_THROWS_AS(RatFunc().inverse(), ZeroInput);
}

TEST_CASE("derivative satisfies the product and quotient rules") {
    std::mt19937 rng(9);
    for (int it = 0; it < 40; ++it) {
        RatFunc a = rnd_ratfunc(rng);
        RatFunc b = rnd_ratfunc(rng);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        CHECK((a + b).derivative() == a.derivative() + b.derivative());
        if (!a.is_zero() && !b.is_zero()) {
            RatFunc prod = a * b;
            CHECK(prod.log_derivative() == a.log_derivative() + b.log_derivative());
            CHECK(a.log_derivative() == a.derivative() / a);
        }
    }
    CHECK(RatFunc::t().derivative() == RatFunc(1));
    CHECK(RatFunc(Rational(7)).derivative().is_zero());
    CHECK_THROWS_AS(RatFunc().log_derivative(), ZeroInput);
}

TEST_CASE("powers and evaluation") {
    Poly t = Poly::t();
    RatFunc f(t, t + Poly(1));
    CHECK(f.pow(0) == RatFunc(1));
    CHECK(f.pow(2) == f * f);
    CHECK(f.pow(-2) == (f * f).inverse());
    CHECK(f.eval(Rational(1)) == Rational(1, 2));
    CHECK_THROWS_AS(f.eval(Rational(-1)), PoleAtPoint);
}

TEST_CASE("canonical strings") {
    Poly t = Poly::t();
    CHECK(RatFunc(Poly(1), t).str() == "1/t");
    CHECK(RatFunc(Poly(1), t * t).str() == "1/t^2");
    CHECK(RatFunc(t + Poly(1), t).str() == "(t + 1)/t");
    CHECK(RatFunc(Poly(1), t * t + Poly(1)).str() == "1/(t^2 + 1)");
    CHECK(RatFunc(t.scaled(Rational(2)), t + Poly(1)).str() == "2*t/(t + 1)");
    CHECK(RatFunc(t * t).str() == "t^2");
    CHECK(RatFunc().str() == "0");
    CHECK(RatFunc(Poly(t).scaled(Rational(1, 2))).str() == "1/2*t");
}

TEST_CASE("partial fractions round-trips on random inputs") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> parts_d(1, 3);
    std::uniform_int_distribution<int> pow_d(1, 3);
    int nontrivial = 0;
    for (int it = 0; it < 500; ++it) {
        Poly den(Rational(1));
        const int parts = parts_d(rng);
        for (int j = 0; j < parts; ++j) {
            Poly b = rnd_nonzero(rng, 2);
            if (b.is_constant()) b = Poly::t() + b;
            den *= b.pow(pow_d(rng));
        }
        RatFunc f(rnd_poly(rng, 6), den);
        PartialFractions pf = partial_fractions(f);
        CHECK(recombine(pf) == f);
        if (!pf.terms.empty()) ++nontrivial;
        for (const auto& term : pf.terms) {
            CHECK(term.base.is_monic());
            CHECK(term.power >= 1);
            CHECK(!term.numerator.is_zero());
            CHECK(term.numerator.deg() < term.base.deg());
        }
    }
    CHECK(nontrivial > 400);
}

TEST_CASE("partial fractions of fixed examples") {
    Poly t = Poly::t();

    SUBCASE("1/(t^2 - 1) splits over the two poles") {
        PartialFractions pf = partial_fractions(RatFunc(Poly(1), t * t - Poly(1)));
        CHECK(pf.polynomial.is_zero());
        REQUIRE(pf.terms.size() == 2);
        CHECK(pf.terms[0].base.str() == "t - 1");
        CHECK(pf.terms[0].numerator.str() == "1/2");
        CHECK(pf.terms[1].base.str() == "t + 1");
        CHECK(pf.terms[1].numerator.str() == "-1/2");
    }

    SUBCASE("double pole keeps both powers") {
        // (2t + 3)/t^2 = 2/t + 3/t^2
        PartialFractions pf = partial_fractions(RatFunc(t.scaled(Rational(2)) + Poly(3), t * t));
        CHECK(pf.polynomial.is_zero());
        REQUIRE(pf.terms.size() == 2);
        CHECK(pf.terms[0].power == 1);
        CHECK(pf.terms[0].numerator.str() == "2");
        CHECK(pf.terms[1].power == 2);
        CHECK(pf.terms[1].numerator.str() == "3");
    }

    SUBCASE("polynomial part is split off") {
        RatFunc f(t * t * t, t - Poly(1));
        PartialFractions pf = partial_fractions(f);
        CHECK(pf.polynomial.str() == "t^2 + t + 1");
        REQUIRE(pf.terms.size() == 1);
        CHECK(pf.terms[0].numerator.str() == "1");
        CHECK(recombine(pf) == f);
    }

    SUBCASE("irreducible quadratic base stays whole") {
        RatFunc f(t + Poly(5), (t * t + Poly(1)) * (t - Poly(2)));
        PartialFractions pf = partial_fractions(f);
        REQUIRE(pf.terms.size() == 2);
        CHECK(pf.terms[1].base.str() == "t^2 + 1");
        CHECK(recombine(pf) == f);
    }

    SUBCASE("denominator degree cap") {
        CHECK_THROWS_AS(partial_fractions(RatFunc(Poly(1), Poly::t().pow(33))),
                        UnsupportedInput);
        CHECK_NOTHROW(partial_fractions(RatFunc(Poly(1), Poly::t().pow(32))));
    }
}
