#include "freecurve/report.hpp"

#include <sstream>

#include "freecurve/errors.hpp"
#include "freecurve/parser.hpp"

namespace freecurve::report {

json poly_json(const Poly& p) { return p.str(); }

json derivation_json(const Derivation& d) {
    return json::array({d.coeffs()[0].str(), d.coeffs()[1].str(), d.coeffs()[2].str()});
}

json profile_json(const HilbertProfile& p) {
    json j;
    j["values"] = p.values;
    j["stable_value"] = p.stable_value ? json(*p.stable_value) : json(nullptr);
    j["stabilized_at"] = p.stabilized_at ? json(*p.stabilized_at) : json(nullptr);
    j["t_max"] = p.t_max;
    j["verdict"] = verdict_name(p.verdict);
    return j;
}

json certificate_json(const Poly& curve, const FreenessCertificate& cert) {
    json j;
    j["curve"] = curve.str();
    j["exponents"] = json::array({cert.a, cert.b});
    j["theta1"] = derivation_json(cert.theta1);
    j["theta2"] = derivation_json(cert.theta2);
    j["c"] = cert.c.str();
    j["k1"] = cert.k1.str();
    j["k2"] = cert.k2.str();
    return j;
}

json verdict_json(const FreenessVerdict& v) {
    json j;
    switch (v.status) {
        case FreenessStatus::Free: j["status"] = "free"; break;
        case FreenessStatus::NotFree: j["status"] = "not-free"; break;
        case FreenessStatus::Inconclusive: j["status"] = "inconclusive"; break;
    }
    if (v.certificate) j["exponents"] = json::array({v.certificate->a, v.certificate->b});
    if (!v.reason.empty()) j["reason"] = v.reason;
    j["mdr"] = v.mdr ? json(*v.mdr) : json(nullptr);
    return j;
}

json eigenscheme_json(const Eigenscheme& e) {
    json j;
    j["derivation"] = derivation_json(e.source);
    j["generators"] = json::array({e.minors[0].str(), e.minors[1].str(), e.minors[2].str()});
    j["finiteness"] = verdict_name(e.finiteness());
    if (e.profile) j["profile"] = profile_json(*e.profile);
    if (e.finite()) j["length"] = e.length();
    if (e.degenerate) j["degenerate"] = true;
    return j;
}

json containment_json(const ContainmentResult& c) {
    json j;
    j["contains"] = c.contains();
    if (c.certificate) {
        json cert;
        cert["q"] = json::array(
            {c.certificate->q[0].str(), c.certificate->q[1].str(), c.certificate->q[2].str()});
        cert["c"] = c.certificate->c.str();
        j["certificate"] = cert;
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json equivalence_json(const EquivalenceReport& r) {
    json j;
    j["exponents"] = json::array({r.a, r.b});
    j["free"] = r.free;
    j["contains_eigenscheme"] = r.contains;
    j["agree"] = r.free == r.contains;
    return j;
}

json pencil_json(const Pencil& p) {
    json j;
    j["f"] = p.f.str();
    j["g"] = p.g.str();
    j["degrees"] = json::array({p.n, p.m});
    j["powers"] = json::array({p.a, p.b});
    j["canonical_derivation"] = derivation_json(p.canonical);
    return j;
}

json point_json(const std::array<Scalar, 3>& p) {
    return json::array({p[0].str(), p[1].str(), p[2].str()});
}

json analysis_json(const PencilAnalysis& a) {
    json j;
    j["base_locus"] = profile_json(a.base_locus);
    j["gradient_locus"] = profile_json(a.gradient_locus);
    j["eigenscheme"] = eigenscheme_json(a.gamma);
    json members = json::array();
    for (const SingularMember& s : a.singular_members) {
        json e;
        e["point"] = point_json(s.point);
        e["parameter"] = json::array({s.param.first.str(), s.param.second.str()});
        members.push_back(e);
    }
    j["singular_members"] = members;
    j["residual_degrees"] = a.residual_degrees;
    if (a.substitution) j["substituted_f_plus_cg"] = a.substitution->str();
    return j;
}

json pencil_freeness_json(const PencilFreenessReport& r) {
    json j;
    j["exponents"] = json::array({r.a_exp, r.b_exp});
    j["free"] = r.free;
    j["contains_eigenscheme"] = r.contains;
    j["agree"] = r.free == r.contains;
    return j;
}

json local_invariants_json(const LocalInvariants& inv) {
    json j;
    j["point"] = point_json(inv.point);
    j["mu"] = inv.mu;
    j["tau"] = inv.tau;
    j["quasihomogeneous"] = inv.quasihomogeneous();
    return j;
}

ParsedCertificate certificate_from_json(const json& j) {
    FieldId field = FieldId::parse(j.at("field").get<std::string>());
    Poly curve = parse_poly(j.at("curve").get<std::string>(), field);
    auto poly_triple = [&](const json& arr) {
        if (!arr.is_array() || arr.size() != 3) throw Refusal("certificate derivations must be triples");
        return std::array<Poly, 3>{parse_poly(arr[0].get<std::string>(), field),
                                   parse_poly(arr[1].get<std::string>(), field),
                                   parse_poly(arr[2].get<std::string>(), field)};
    };
    FreenessCertificate cert{j.at("exponents").at(0).get<int>(),
                             j.at("exponents").at(1).get<int>(),
                             Derivation(poly_triple(j.at("theta1"))),
                             Derivation(poly_triple(j.at("theta2"))),
                             parse_scalar(j.at("c").get<std::string>(), field),
                             parse_poly(j.at("k1").get<std::string>(), field),
                             parse_poly(j.at("k2").get<std::string>(), field)};
    return ParsedCertificate{field, std::move(curve), std::move(cert)};
}

namespace {

void render(const json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           (it.value().front().is_object() || it.value().front().is_array()))) {
                out << prefix << it.key() << ":\n";
                render(it.value(), prefix + "  ", out);
            } else {
                out << prefix << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_object() || item.is_array()) {
                out << prefix << "-\n";
                render(item, prefix + "  ", out);
            } else {
                out << prefix << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        }
    } else {
        out << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const json& j) {
    std::ostringstream out;
    render(j, "", out);
    return out.str();
}

}  // namespace freecurve::report
