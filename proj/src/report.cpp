#include "pvg/report.hpp"

#include <json.hpp>
#include <sstream>

#include "zpoly.hpp"

namespace pvg {

namespace {

using ordered_json = nlohmann::ordered_json;

// primitive integer rendering of the minimal polynomial plus the canonical
// isolating interval, so equal values serialize to equal bytes
ordered_json ralg_json(const RealAlgebraic& x) {
    const RealAlgebraic c = x.canonicalized();
    ordered_json j;
    j["poly"] = detail::z_to_poly(detail::z_from_poly(c.minimal_poly()).num).str();
    j["interval"] = "[" + c.lower().str() + "," + c.upper().str() + "]";
    return j;
}

std::string variant_key(const RankOneClassification& cl) {
    if (std::holds_alternative<Kummer>(cl)) return "kummer";
    if (std::holds_alternative<MultiplicativeTranscendental>(cl))
        return "multiplicative_transcendental";
    if (std::holds_alternative<AdditiveTranscendental>(cl))
        return "additive_transcendental";
    return "in_field";
}

constexpr std::size_t kLabelWidth = 22;

void line(std::ostringstream& out, const std::string& label,
          const std::string& value) {
    out << label << ':';
    for (std::size_t i = label.size() + 1; i < kLabelWidth; ++i) out << ' ';
    out << value << '\n';
}

std::string join_reps(const std::vector<RealAlgebraic>& reps) {
    std::string out;
    for (const RealAlgebraic& r : reps) {
        if (!out.empty()) out += ", ";
        out += r.str();
    }
    return out;
}

} // namespace

std::string descriptor_str(const GroupoidDescriptor& gd) {
    if (const KummerGroupoid* k = std::get_if<KummerGroupoid>(&gd)) {
        std::ostringstream out;
        out << "kummer(n = " << k->n << ", f = " << k->f.str() << ")";
        return out.str();
    }
    if (const SingleObjectTorsor* t = std::get_if<SingleObjectTorsor>(&gd))
        return t->group == GaloisGroup::Gm ? "torsor(G_m)" : "torsor(G_a)";
    return "trivial";
}

ClassificationReport build_report(const LinearODE& eq, const TheorySpec& th,
                                  CertificateLevel level) {
    ClassificationReport r;
    r.equation = equation_str(eq);
    r.ode = eq;
    r.classification = eq.kind == LinearODE::Kind::Homogeneous
                           ? classify_rank_one(eq)
                           : classify_quadrature(eq);
    r.groupoid = build_groupoid(r.classification);
    r.theory = th;
    r.objects = restrict_objects(r.groupoid, TheorySpec::fields());
    r.restricted = restrict_objects(r.groupoid, th);
    if (const KummerGroupoid* k = std::get_if<KummerGroupoid>(&r.groupoid))
        r.tautological = tautological_point(*k);
    r.existence = existence_witness(r.classification, th);
    r.classes = iso_classes(r.groupoid, th);
    r.uniqueness = uniqueness_verdict(r.groupoid, th);
    r.level = level;

    if (std::holds_alternative<Kummer>(r.classification)) {
        r.lift = minimal_lift_rank_one(r.classification);
        r.closure = is_d_invariant(*r.lift);
    }
    if (level == CertificateLevel::Full) {
        if (r.existence.witness_c && !r.restricted.singleton)
            r.witness_member = r.restricted.set.contains(*r.existence.witness_c);
        if (const KummerGroupoid* k = std::get_if<KummerGroupoid>(&r.groupoid)) {
            if (th.kind == TheorySpec::Kind::OrderedFields)
                r.cut_sign = sign_at_cut_certified(k->f, th.cut);
            const RealAlgebraic one(1);
            const RealAlgebraic other(k->n % 2 == 0 ? -1 : 2);
            r.disjointness.push_back(
                {one, other, disjoint_lifts(*r.lift, one, *r.lift, other)});
            r.disjointness.push_back(
                {one, one, disjoint_lifts(*r.lift, one, *r.lift, one)});
        }
    }
    return r;
}

std::string to_json(const ClassificationReport& r) {
    ordered_json j;
    j["input"]["equation"] = r.equation;
    j["input"]["kind"] = r.ode.kind == LinearODE::Kind::Homogeneous
                             ? "homogeneous"
                             : "quadrature";

    ordered_json cls;
    cls["variant"] = variant_key(r.classification);
    if (const Kummer* k = std::get_if<Kummer>(&r.classification)) {
        cls["n"] = k->n;
        cls["f"] = k->f.str();
        ordered_json rs = ordered_json::array();
        for (const auto& [prime, residue] : k->residues) {
            ordered_json e;
            e["prime"] = prime.str();
            e["residue"] = residue.str();
            rs.push_back(e);
        }
        cls["residues"] = rs;
    } else {
        cls["n"] = nullptr;
        cls["f"] = nullptr;
        cls["residues"] = nullptr;
    }
    j["classification"] = cls;

    j["galois_group"] = r.existence.presentation.group_str();
    j["groupoid"] = descriptor_str(r.groupoid);
    j["theory"] = r.theory.str();
    j["objects_O"] = r.objects.str();
    j["restricted_O_S"] = r.restricted.str();
    j["tautological_K_point"] =
        r.tautological ? ordered_json(r.tautological->str()) : ordered_json(nullptr);

    ordered_json ex;
    ex["witness_c"] = r.existence.witness_c ? ralg_json(*r.existence.witness_c)
                                            : ordered_json(nullptr);
    ex["presentation"] = r.existence.presentation.relation_str();
    j["existence"] = ex;

    ordered_json un;
    un["verdict"] = r.uniqueness.str();
    ordered_json cj;
    cj["count"] = r.classes.count;
    ordered_json reps = ordered_json::array();
    for (const RealAlgebraic& c : r.classes.representatives)
        reps.push_back(ralg_json(c));
    cj["representatives"] = reps;
    un["classes"] = cj;
    j["uniqueness"] = un;

    ordered_json certs;
    if (r.closure) {
        ordered_json d;
        d["relation"] = r.lift->relation.str();
        d["quotient"] = r.closure->quotient.str();
        d["remainder"] = r.closure->remainder.str();
        certs["d_invariance"] = d;
    } else {
        certs["d_invariance"] = nullptr;
    }
    if (!r.disjointness.empty()) {
        ordered_json ds = ordered_json::array();
        for (const DisjointnessSample& s : r.disjointness) {
            ordered_json e;
            e["c1"] = ralg_json(s.c1);
            e["c2"] = ralg_json(s.c2);
            e["disjoint"] = s.result.disjoint;
            e["scalar_part"] = ralg_json(s.result.scalar_part);
            e["function_part"] = s.result.function_part.str();
            ds.push_back(e);
        }
        certs["disjointness_samples"] = ds;
    } else {
        certs["disjointness_samples"] = nullptr;
    }
    if (r.witness_member) {
        ordered_json w;
        w["value"] = ralg_json(*r.existence.witness_c);
        w["set"] = r.restricted.str();
        w["member"] = *r.witness_member;
        certs["witness_membership"] = w;
    } else {
        certs["witness_membership"] = nullptr;
    }
    if (r.cut_sign) {
        ordered_json s;
        s["sign"] = r.cut_sign->sign;
        s["sample"] = r.cut_sign->sample.str();
        s["value"] = r.cut_sign->value.str();
        s["window_lo"] = r.cut_sign->window_lo.str();
        s["window_hi"] = r.cut_sign->window_hi.str();
        certs["sign_at_cut"] = s;
    } else {
        certs["sign_at_cut"] = nullptr;
    }
    j["certificates"] = certs;

    return j.dump(2) + "\n";
}

std::string to_text(const ClassificationReport& r) {
    std::ostringstream out;
    line(out, "equation", r.equation);

    if (const Kummer* k = std::get_if<Kummer>(&r.classification)) {
        std::ostringstream c;
        c << "kummer, n = " << k->n << ", f = " << k->f.str();
        line(out, "classification", c.str());
        std::string rs;
        for (const auto& [prime, residue] : k->residues) {
            if (!rs.empty()) rs += "; ";
            rs += prime.str() + ": " + residue.str();
        }
        line(out, "residues", rs);
    } else if (const InField* s = std::get_if<InField>(&r.classification)) {
        line(out, "classification", "in field, solution = " + s->solution.str());
    } else if (std::holds_alternative<MultiplicativeTranscendental>(
                   r.classification)) {
        line(out, "classification", "multiplicative transcendental");
    } else {
        line(out, "classification", "additive transcendental");
    }

    line(out, "galois group", r.existence.presentation.group_str());
    line(out, "groupoid", descriptor_str(r.groupoid));
    line(out, "theory", r.theory.str());
    line(out, "objects O", r.objects.str());
    line(out, "restricted O_S", r.restricted.str());
    line(out, "tautological K-point",
         r.tautological ? r.tautological->str() : "absent");

    std::string ex;
    if (r.existence.witness_c)
        ex = "witness c = " + r.existence.witness_c->str() + ", presentation " +
             r.existence.presentation.relation_str();
    else
        ex = "presentation " + r.existence.presentation.relation_str();
    line(out, "existence", ex);

    std::string un = r.uniqueness.str();
    if (!r.classes.representatives.empty())
        un += ", representatives: " + join_reps(r.classes.representatives);
    line(out, "uniqueness", un);

    out << "certificates:\n";
    bool any = false;
    if (r.closure) {
        out << "  d-invariance: relation " << r.lift->relation.str()
            << ", quotient " << r.closure->quotient.str() << ", remainder "
            << r.closure->remainder.str() << '\n';
        any = true;
    }
    if (r.witness_member) {
        out << "  witness membership: " << r.existence.witness_c->str() << " in "
            << r.restricted.str() << ": " << (*r.witness_member ? "yes" : "no")
            << '\n';
        any = true;
    }
    if (r.cut_sign) {
        out << "  sign at cut: sign = " << r.cut_sign->sign << ", sample "
            << r.cut_sign->sample.str() << ", value " << r.cut_sign->value.str()
            << ", window (" << r.cut_sign->window_lo.str() << ","
            << r.cut_sign->window_hi.str() << "]\n";
        any = true;
    }
    for (const DisjointnessSample& s : r.disjointness) {
        out << "  disjointness: c1 = " << s.c1.str() << ", c2 = " << s.c2.str()
            << ": " << (s.result.disjoint ? "disjoint" : "meets")
            << ", scalar part " << s.result.scalar_part.str() << ", function part "
            << s.result.function_part.str() << '\n';
        any = true;
    }
    if (!any) out << "  none\n";
    return out.str();
}

} // namespace pvg
