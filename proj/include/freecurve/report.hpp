#ifndef FREECURVE_REPORT_HPP
#define FREECURVE_REPORT_HPP

#include <json.hpp>

#include "freecurve/eigenscheme.hpp"
#include "freecurve/pencil.hpp"
#include "freecurve/singularities.hpp"

namespace freecurve::report {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

json poly_json(const Poly& p);
json derivation_json(const Derivation& d);
json profile_json(const HilbertProfile& p);
json certificate_json(const Poly& curve, const FreenessCertificate& cert);
json verdict_json(const FreenessVerdict& v);
json eigenscheme_json(const Eigenscheme& e);
json containment_json(const ContainmentResult& c);
json equivalence_json(const EquivalenceReport& r);
json pencil_json(const Pencil& p);
json analysis_json(const PencilAnalysis& a);
json pencil_freeness_json(const PencilFreenessReport& r);
json point_json(const std::array<Scalar, 3>& p);
json local_invariants_json(const LocalInvariants& inv);

/// Re-reads a serialized freeness certificate (the verify-cert payload).
struct ParsedCertificate {
    FieldId field;
    Poly curve;
    FreenessCertificate certificate;
};
ParsedCertificate certificate_from_json(const json& j);

/// Generic text rendering of a JSON report; the CLI never builds text
/// output by a second code path.
std::string render_text(const json& j);

}  // namespace freecurve::report

#endif
