#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "pvg/report.hpp"

using namespace pvg;

namespace {

LinearODE example_equation() {
    return LinearODE::homogeneous(RatFunc(Poly(1), Poly({Rational(0), Rational(2)})));
}

// Authored by hand from the intended schema; the emitter has to match it,
// never the other way around.
const std::string kExampleSummaryOrdered = R"json({
  "input": {
    "equation": "x' = 1/2/t * x",
    "kind": "homogeneous"
  },
  "classification": {
    "variant": "kummer",
    "n": 2,
    "f": "t",
    "residues": [
      {
        "prime": "t",
        "residue": "1/2"
      }
    ]
  },
  "galois_group": "mu_2",
  "groupoid": "kummer(n = 2, f = t)",
  "theory": "ordered fields, t -> 0+",
  "objects_O": "(-inf, 0) u (0, +inf)",
  "restricted_O_S": "(0, +inf)",
  "tautological_K_point": "1/t",
  "existence": {
    "witness_c": {
      "poly": "t - 1",
      "interval": "[1,1]"
    },
    "presentation": "y^2 - t"
  },
  "uniqueness": {
    "verdict": "unique",
    "classes": {
      "count": 1,
      "representatives": [
        {
          "poly": "t - 1",
          "interval": "[1,1]"
        }
      ]
    }
  },
  "certificates": {
    "d_invariance": {
      "relation": "y^2 - t*w",
      "quotient": "1/t",
      "remainder": "0"
    },
    "disjointness_samples": null,
    "witness_membership": null,
    "sign_at_cut": null
  }
}
)json";

const std::string kExampleFullFields = R"json({
  "input": {
    "equation": "x' = 1/2/t * x",
    "kind": "homogeneous"
  },
  "classification": {
    "variant": "kummer",
    "n": 2,
    "f": "t",
    "residues": [
      {
        "prime": "t",
        "residue": "1/2"
      }
    ]
  },
  "galois_group": "mu_2",
  "groupoid": "kummer(n = 2, f = t)",
  "theory": "fields",
  "objects_O": "(-inf, 0) u (0, +inf)",
  "restricted_O_S": "(-inf, 0) u (0, +inf)",
  "tautological_K_point": "1/t",
  "existence": {
    "witness_c": {
      "poly": "t - 1",
      "interval": "[1,1]"
    },
    "presentation": "y^2 - t"
  },
  "uniqueness": {
    "verdict": "classes(2)",
    "classes": {
      "count": 2,
      "representatives": [
        {
          "poly": "t - 1",
          "interval": "[1,1]"
        },
        {
          "poly": "t + 1",
          "interval": "[-1,-1]"
        }
      ]
    }
  },
  "certificates": {
    "d_invariance": {
      "relation": "y^2 - t*w",
      "quotient": "1/t",
      "remainder": "0"
    },
    "disjointness_samples": [
      {
        "c1": {
          "poly": "t - 1",
          "interval": "[1,1]"
        },
        "c2": {
          "poly": "t + 1",
          "interval": "[-1,-1]"
        },
        "disjoint": true,
        "scalar_part": {
          "poly": "t - 4",
          "interval": "[4,4]"
        },
        "function_part": "t^2"
      },
      {
        "c1": {
          "poly": "t - 1",
          "interval": "[1,1]"
        },
        "c2": {
          "poly": "t - 1",
          "interval": "[1,1]"
        },
        "disjoint": false,
        "scalar_part": {
          "poly": "t",
          "interval": "[0,0]"
        },
        "function_part": "t^2"
      }
    ],
    "witness_membership": {
      "value": {
        "poly": "t - 1",
        "interval": "[1,1]"
      },
      "set": "(-inf, 0) u (0, +inf)",
      "member": true
    },
    "sign_at_cut": null
  }
}
)json";

const std::string kExampleTextOrdered =
    "equation:             x' = 1/2/t * x\n"
    "classification:       kummer, n = 2, f = t\n"
    "residues:             t: 1/2\n"
    "galois group:         mu_2\n"
    "groupoid:             kummer(n = 2, f = t)\n"
    "theory:               ordered fields, t -> 0+\n"
    "objects O:            (-inf, 0) u (0, +inf)\n"
    "restricted O_S:       (0, +inf)\n"
    "tautological K-point: 1/t\n"
    "existence:            witness c = 1, presentation y^2 - t\n"
    "uniqueness:           unique, representatives: 1\n"
    "certificates:\n"
    "  d-invariance: relation y^2 - t*w, quotient 1/t, remainder 0\n";

} // namespace

TEST_CASE("golden json, ordered theory, summary certificates") {
    const ClassificationReport r =
        build_report(example_equation(),
                     TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic())),
                     CertificateLevel::Summary);
    CHECK(to_json(r) == kExampleSummaryOrdered);
}

TEST_CASE("golden json, plain fields, full certificates") {
    const ClassificationReport r = build_report(
        example_equation(), TheorySpec::fields(), CertificateLevel::Full);
    CHECK(to_json(r) == kExampleFullFields);
}

TEST_CASE("golden text rendering") {
    const ClassificationReport r =
        build_report(example_equation(),
                     TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic())),
                     CertificateLevel::Summary);
    CHECK(to_text(r) == kExampleTextOrdered);
}

TEST_CASE("reports are byte deterministic") {
    for (const auto level : {CertificateLevel::Summary, CertificateLevel::Full}) {
        const ClassificationReport a = build_report(
            example_equation(), TheorySpec::fields(), level);
        const ClassificationReport b = build_report(
            example_equation(), TheorySpec::fields(), level);
        CHECK(to_json(a) == to_json(b));
        CHECK(to_text(a) == to_text(b));
    }
}

TEST_CASE("top level key order is fixed") {
    const ClassificationReport r = build_report(
        example_equation(), TheorySpec::fields(), CertificateLevel::Summary);
    const auto j = nlohmann::ordered_json::parse(to_json(r));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> want = {
        "input",        "classification",       "galois_group", "groupoid",
        "theory",       "objects_O",            "restricted_O_S",
        "tautological_K_point", "existence",    "uniqueness",   "certificates"};
    CHECK(keys == want);
}

TEST_CASE("quadrature solved in the field") {
    const ClassificationReport r =
        build_report(LinearODE::quadrature(RatFunc(Poly::t())),
                     TheorySpec::fields(), CertificateLevel::Summary);
    const auto j = nlohmann::ordered_json::parse(to_json(r));
    CHECK(j["input"]["equation"] == "x' = t");
    CHECK(j["input"]["kind"] == "quadrature");
    CHECK(j["classification"]["variant"] == "in_field");
    CHECK(j["classification"]["n"].is_null());
    CHECK(j["classification"]["residues"].is_null());
    CHECK(j["galois_group"] == "trivial");
    CHECK(j["groupoid"] == "trivial");
    CHECK(j["objects_O"] == "{*}");
    CHECK(j["restricted_O_S"] == "{*}");
    CHECK(j["tautological_K_point"].is_null());
    CHECK(j["existence"]["witness_c"].is_null());
    CHECK(j["existence"]["presentation"] == "y - 1/2*t^2");
    CHECK(j["uniqueness"]["verdict"] == "unique");
    CHECK(j["certificates"]["d_invariance"].is_null());
    CHECK(to_text(r).find("in field, solution = 1/2*t^2") != std::string::npos);
}

TEST_CASE("transcendental variants") {
    const ClassificationReport ga =
        build_report(LinearODE::quadrature(RatFunc(Poly(1), Poly::t())),
                     TheorySpec::fields(), CertificateLevel::Full);
    auto j = nlohmann::ordered_json::parse(to_json(ga));
    CHECK(j["classification"]["variant"] == "additive_transcendental");
    CHECK(j["galois_group"] == "G_a");
    CHECK(j["groupoid"] == "torsor(G_a)");
    CHECK(j["existence"]["presentation"] == "transcendental");
    CHECK(j["certificates"]["witness_membership"].is_null());
    CHECK(j["uniqueness"]["classes"]["count"] == 1);
    CHECK(j["uniqueness"]["classes"]["representatives"].empty());

    // second order pole forces the multiplicative torsor
    const ClassificationReport gm = build_report(
        LinearODE::homogeneous(RatFunc(Poly(1), Poly::t().pow(2))),
        TheorySpec::fields(), CertificateLevel::Summary);
    j = nlohmann::ordered_json::parse(to_json(gm));
    CHECK(j["classification"]["variant"] == "multiplicative_transcendental");
    CHECK(j["galois_group"] == "G_m");
    CHECK(j["groupoid"] == "torsor(G_m)");
}

TEST_CASE("ordered theory full certificates include the cut sign") {
    const ClassificationReport r =
        build_report(example_equation(),
                     TheorySpec::ordered_fields(Cut::minus_infinity()),
                     CertificateLevel::Full);
    REQUIRE(r.cut_sign.has_value());
    CHECK(r.cut_sign->sign == -1);
    // the certificate's sample really evaluates to the claimed value
    const RatFunc f = std::get<Kummer>(r.classification).f;
    CHECK(f.eval(r.cut_sign->sample) == r.cut_sign->value);
    CHECK((r.cut_sign->value.sign() < 0));

    const auto j = nlohmann::ordered_json::parse(to_json(r));
    CHECK(j["certificates"]["sign_at_cut"]["sign"] == -1);
    CHECK(j["restricted_O_S"] == "(-inf, 0)");
    CHECK(j["existence"]["witness_c"]["poly"] == "t + 1");
    CHECK(j["existence"]["presentation"] == "y^2 + t");

    REQUIRE(r.witness_member.has_value());
    CHECK(*r.witness_member);
    REQUIRE(r.disjointness.size() == 2);
    CHECK(r.disjointness[0].result.disjoint);
    CHECK(!r.disjointness[1].result.disjoint);
}
