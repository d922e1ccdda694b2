#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pvg/diffeq.hpp"
#include "pvg/dvariety.hpp"
#include "pvg/groupoid.hpp"

namespace pvg {

enum class CertificateLevel { Summary, Full };

struct DisjointnessSample {
    RealAlgebraic c1, c2;
    Disjointness result;
};

// Everything the pipeline decides about one equation under one theory. All
// members are plain values, so serialization is a pure rendering step and a
// report can be rebuilt or compared field by field.
struct ClassificationReport {
    std::string equation;
    LinearODE ode;
    RankOneClassification classification;
    GroupoidDescriptor groupoid;
    TheorySpec theory;
    ObjectSet objects;      // unrestricted object set
    ObjectSet restricted;   // objects surviving the theory
    std::optional<RatFunc> tautological;
    ExistenceResult existence;
    IsoClasses classes;
    UniquenessVerdict uniqueness;
    CertificateLevel level = CertificateLevel::Summary;

    // algebraic case only
    std::optional<LiftedRelation> lift;
    std::optional<DInvariance> closure;

    // full certificate level only
    std::optional<bool> witness_member;
    std::optional<CutSignCertificate> cut_sign;
    std::vector<DisjointnessSample> disjointness;
};

// "kummer(n = 2, f = t)", "torsor(G_m)", "torsor(G_a)", "trivial"
std::string descriptor_str(const GroupoidDescriptor& gd);

ClassificationReport build_report(const LinearODE& eq, const TheorySpec& th,
                                  CertificateLevel level);

// Fixed key order, two-space indent, trailing newline. Identical inputs give
// identical bytes.
std::string to_json(const ClassificationReport& r);

// Aligned label/value lines followed by a certificates block.
std::string to_text(const ClassificationReport& r);

} // namespace pvg
