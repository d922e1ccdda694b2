#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pvg/dvariety.hpp"
#include "pvg/errors.hpp"
#include "pvg/groupoid.hpp"

using namespace pvg;

namespace {

RatFunc one_over_2t() { return RatFunc(Poly(1), Poly({Rational(0), Rational(2)})); }

RankOneClassification sqrt_t_case() {
    return classify_rank_one(LinearODE::homogeneous(one_over_2t()));
}

RealAlgebraic q(long n, long d = 1) { return RealAlgebraic(Rational(n, d)); }

SemialgebraicSet1D punctured() {
    return SemialgebraicSet1D::point(RealAlgebraic()).complement();
}

} // namespace

TEST_CASE("groupoid shapes") {
    const GroupoidDescriptor g1 = build_groupoid(sqrt_t_case());
    const KummerGroupoid* k = std::get_if<KummerGroupoid>(&g1);
    REQUIRE(k != nullptr);
    CHECK(k->n == 2);
    CHECK(k->f == RatFunc(Poly::t()));

    CHECK(std::holds_alternative<SingleObjectTorsor>(
        build_groupoid(MultiplicativeTranscendental{})));
    CHECK(std::get<SingleObjectTorsor>(build_groupoid(AdditiveTranscendental{})).group ==
          GaloisGroup::Ga);
    CHECK(std::holds_alternative<TrivialGroupoid>(
        build_groupoid(InField{RatFunc(Poly(1))})));
}

TEST_CASE("tautological field point") {
    const KummerGroupoid k{2, RatFunc(Poly::t())};
    const RatFunc pt = tautological_point(k);
    CHECK(!pt.is_zero());
    CHECK(pt == RatFunc(Poly(1), Poly::t()));
    CHECK(pt.str() == "1/t");

    const Poly f = Poly::t().pow(3) * (Poly::t() - Poly(1)).pow(2);
    CHECK(tautological_point({2, RatFunc(f)}) == RatFunc(Poly(1), f));
}

TEST_CASE("object restriction") {
    const GroupoidDescriptor g = build_groupoid(sqrt_t_case());

    const ObjectSet plain = restrict_objects(g, TheorySpec::fields());
    CHECK(!plain.singleton);
    CHECK(plain.set == punctured());
    CHECK(plain.str() == "(-inf, 0) u (0, +inf)");

    const ObjectSet pos = restrict_objects(
        g, TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic())));
    CHECK(pos.set == SemialgebraicSet1D::greater_than(RealAlgebraic()));
    CHECK(pos.str() == "(0, +inf)");

    const ObjectSet neg = restrict_objects(
        g, TheorySpec::ordered_fields(Cut::minus_infinity()));
    CHECK(neg.set == SemialgebraicSet1D::less_than(RealAlgebraic()));

    CHECK(restrict_objects(g, TheorySpec::ordered_fields(Cut::left_of(RealAlgebraic())))
              .set == SemialgebraicSet1D::less_than(RealAlgebraic()));

    // odd root order ignores the ordering
    const KummerGroupoid cube{3, RatFunc(Poly::t())};
    CHECK(restrict_objects(GroupoidDescriptor(cube),
                           TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic())))
              .set == punctured());

    const ObjectSet star =
        restrict_objects(SingleObjectTorsor{GaloisGroup::Gm}, TheorySpec::fields());
    CHECK(star.singleton);
    CHECK(star.str() == "{*}");
}

TEST_CASE("restriction matches the positivity formula") {
    // for y^2 = c*t with t placed just right of 0, membership of a is the
    // statement that -a is not a square, which over the reals is a > 0
    const ObjectSet r = restrict_objects(
        build_groupoid(sqrt_t_case()),
        TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic())));

    std::vector<RealAlgebraic> points = {
        *nth_root(q(2), 2), -*nth_root(q(2), 2), q(1, 3), q(-1, 3),
    };
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    while (points.size() < 50) {
        const Rational v(num(rng), den(rng));
        if (v.sign() != 0) points.push_back(RealAlgebraic(v));
    }
    for (const RealAlgebraic& a : points) {
        const bool not_a_square_of_minus = a.sign() > 0;
        CHECK(r.set.contains(a) == not_a_square_of_minus);
    }
}

TEST_CASE("existence witnesses") {
    const RankOneClassification cl = sqrt_t_case();

    const ExistenceResult pos = existence_witness(
        cl, TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic())));
    CHECK(pos.exists);
    REQUIRE(pos.witness_c.has_value());
    CHECK(*pos.witness_c == q(1));
    CHECK(pos.presentation.relation_str() == "y^2 - t");
    CHECK(pos.presentation.group_str() == "mu_2");

    const ExistenceResult neg =
        existence_witness(cl, TheorySpec::ordered_fields(Cut::minus_infinity()));
    REQUIRE(neg.witness_c.has_value());
    CHECK(*neg.witness_c == q(-1));
    CHECK(neg.presentation.relation_str() == "y^2 + t");

    const ExistenceResult ga =
        existence_witness(AdditiveTranscendental{}, TheorySpec::fields());
    CHECK(!ga.witness_c.has_value());
    CHECK(!ga.presentation.algebraic);
    CHECK(ga.presentation.group_str() == "G_a");

    const ExistenceResult triv = existence_witness(
        classify_rank_one(LinearODE::homogeneous(RatFunc())), TheorySpec::fields());
    CHECK(triv.presentation.group_str() == "trivial");
    CHECK(triv.presentation.relation_str() == "y - 1");

    // witness membership and derivation closure of the specialized relation
    const Kummer& k = std::get<Kummer>(cl);
    for (const auto& th :
         {TheorySpec::fields(),
          TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic())),
          TheorySpec::ordered_fields(Cut::minus_infinity())}) {
        const ExistenceResult e = existence_witness(cl, th);
        REQUIRE(e.witness_c.has_value());
        CHECK(restrict_objects(build_groupoid(cl), th).set.contains(*e.witness_c));

        REQUIRE(e.witness_c->is_rational());
        const RatFunc cf = k.f * RatFunc(Poly(e.witness_c->rational_value()));
        const BiPoly specialized =
            BiPoly::term(static_cast<int>(k.n), 0, RatFunc(Poly(1))) -
            BiPoly::constant(cf);
        const DInvariance cert = is_d_invariant({specialized, one_over_2t()});
        CHECK(cert.invariant);
        CHECK(cert.quotient ==
              BiPoly::constant(RatFunc(Poly(k.n)) * one_over_2t()));
    }
}

TEST_CASE("morphisms") {
    const KummerGroupoid even{2, RatFunc(Poly::t())};
    const KummerGroupoid odd{3, RatFunc(Poly::t())};

    const auto z = morphism_solvable(even, q(4), q(1));
    REQUIRE(z.has_value());
    CHECK(*z == q(2));
    CHECK(!morphism_solvable(even, q(-1), q(1)).has_value());
    const auto zc = morphism_solvable(odd, q(-8), q(1));
    REQUIRE(zc.has_value());
    CHECK(*zc == q(-2));

    CHECK_THROWS_AS(morphism_solvable(even, RealAlgebraic(), q(1)), ZeroObjectPoint);
    CHECK_THROWS_AS(morphism_solvable(even, q(1), RealAlgebraic()), ZeroObjectPoint);

    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> ord(2, 5);
    for (int it = 0; it < 40; ++it) {
        Rational pv(num(rng), den(rng)), qv(num(rng), den(rng));
        if (pv.sign() == 0 || qv.sign() == 0) continue;
        const KummerGroupoid g{ord(rng), RatFunc(Poly::t())};
        const RealAlgebraic p(pv), c(qv);
        const auto m = morphism_solvable(g, p, c);
        if (m) {
            CHECK(m->pow(g.n) * c == p);
        } else {
            CHECK(g.n % 2 == 0);
            CHECK(p.sign() != c.sign());
        }
    }
}

TEST_CASE("isomorphism classes and uniqueness") {
    const GroupoidDescriptor g = build_groupoid(sqrt_t_case());
    const KummerGroupoid& k = std::get<KummerGroupoid>(g);

    const IsoClasses split = iso_classes(g, TheorySpec::fields());
    CHECK(split.count == 2);
    REQUIRE(split.representatives.size() == 2);
    CHECK(split.representatives[0] == q(1));
    CHECK(split.representatives[1] == q(-1));
    // representatives are genuinely non-isomorphic and are objects
    CHECK(!morphism_solvable(k, split.representatives[0], split.representatives[1])
               .has_value());
    const ObjectSet all = restrict_objects(g, TheorySpec::fields());
    for (const auto& rep : split.representatives) CHECK(all.set.contains(rep));

    const TheorySpec pos = TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic()));
    const IsoClasses joined = iso_classes(g, pos);
    CHECK(joined.count == 1);
    REQUIRE(joined.representatives.size() == 1);
    CHECK(joined.representatives[0] == q(1));

    CHECK(iso_classes(build_groupoid(RankOneClassification(
                          Kummer{3, RatFunc(Poly::t()), {}})),
                      TheorySpec::fields())
              .count == 1);
    CHECK(iso_classes(SingleObjectTorsor{GaloisGroup::Gm}, TheorySpec::fields()).count ==
          1);

    CHECK(uniqueness_verdict(g, pos).unique);
    CHECK(uniqueness_verdict(g, pos).str() == "unique");
    const UniquenessVerdict split_verdict = uniqueness_verdict(g, TheorySpec::fields());
    CHECK(!split_verdict.unique);
    CHECK(split_verdict.classes == 2);
    CHECK(split_verdict.str() == "classes(2)");
    CHECK(uniqueness_verdict(TrivialGroupoid{}, TheorySpec::fields()).unique);

    // class count law across root orders
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> ord(2, 6);
    for (int it = 0; it < 12; ++it) {
        const long n = ord(rng);
        const KummerGroupoid kn{n, RatFunc(Poly::t() - Poly(it))};
        CHECK(iso_classes(GroupoidDescriptor(kn), TheorySpec::fields()).count ==
              (n % 2 == 0 ? 2 : 1));
    }
}

TEST_CASE("solvability is an equivalence on object samples") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> ord(2, 4);

    for (int it = 0; it < 10; ++it) {
        const KummerGroupoid g{ord(rng), RatFunc(Poly::t())};
        std::vector<RealAlgebraic> pts;
        while (pts.size() < 4) {
            const Rational v(num(rng), den(rng));
            if (v.sign() != 0) pts.push_back(RealAlgebraic(v));
        }
        if (it % 3 == 0) pts.push_back(*nth_root(q(2), 2));

        for (const auto& p : pts) CHECK(morphism_solvable(g, p, p).has_value());
        for (const auto& p : pts)
            for (const auto& c : pts)
                CHECK(morphism_solvable(g, p, c).has_value() ==
                      morphism_solvable(g, c, p).has_value());
        for (const auto& p : pts)
            for (const auto& c : pts)
                for (const auto& r : pts) {
                    if (morphism_solvable(g, p, c) && morphism_solvable(g, c, r))
                        CHECK(morphism_solvable(g, p, r).has_value());
                }
    }
}

TEST_CASE("axioms check") {
    const KummerGroupoid even{2, RatFunc(Poly::t())};
    CHECK(groupoid_axioms_check(GroupoidDescriptor(even), {q(1), q(4), q(9)}));
    CHECK(groupoid_axioms_check(GroupoidDescriptor(even), {}));

    const KummerGroupoid cube{3, RatFunc(Poly::t())};
    CHECK(groupoid_axioms_check(GroupoidDescriptor(cube), {q(1), q(-8)}));

    CHECK(groupoid_axioms_check(SingleObjectTorsor{GaloisGroup::Ga}, {}));
    CHECK_THROWS_AS(
        groupoid_axioms_check(GroupoidDescriptor(even), {q(1), RealAlgebraic()}),
        ZeroObjectPoint);

    std::mt19937 rng(83);
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> ord(2, 6);
    for (int it = 0; it < 8; ++it) {
        const KummerGroupoid g{ord(rng), RatFunc(Poly::t())};
        std::vector<RealAlgebraic> samples;
        for (int i = 0; i < 3; ++i) {
            long v = num(rng);
            if (g.n % 2 == 1 && i == 2) v = -v;
            samples.push_back(q(v));
        }
        CHECK(groupoid_axioms_check(GroupoidDescriptor(g), samples));
    }
}

TEST_CASE("half line flips with the sign of f at the cut") {
    const Poly tm1 = Poly::t() - Poly(1);
    const std::vector<RatFunc> fams = {
        RatFunc(Poly::t()),
        RatFunc(tm1),
        RatFunc(Poly({Rational(1), Rational(0), Rational(1)})),  // t^2 + 1
        RatFunc(Poly(1), Poly::t()),
    };
    const std::vector<Cut> cuts = {
        Cut::minus_infinity(),
        Cut::plus_infinity(),
        Cut::right_of(RealAlgebraic()),
        Cut::left_of(RealAlgebraic()),
        Cut::right_of(q(1)),
        Cut::left_of(q(1)),
        Cut::right_of(*nth_root(q(2), 2)),
    };
    for (const RatFunc& f : fams) {
        for (const Cut& cut : cuts) {
            const KummerGroupoid g{2, f};
            const ObjectSet r =
                restrict_objects(GroupoidDescriptor(g), TheorySpec::ordered_fields(cut));
            const int s = sign_at_cut(f, cut);
            REQUIRE(s != 0);
            const SemialgebraicSet1D expect =
                s > 0 ? SemialgebraicSet1D::greater_than(RealAlgebraic())
                      : SemialgebraicSet1D::less_than(RealAlgebraic());
            CHECK(r.set == expect);
        }
    }
}
