#ifndef FREECURVE_EIGENSCHEME_HPP
#define FREECURVE_EIGENSCHEME_HPP

#include <optional>

#include "freecurve/derivation.hpp"

namespace freecurve {

/// The subscheme cut out by the 2x2 minors of [(x,y,z) | (P1,P2,P3)].
struct Eigenscheme {
    Derivation source;
    std::array<Poly, 3> minors;  // fixed sign convention: wedge of the columns
    GradedIdeal ideal;           // the nonzero minors
    std::optional<HilbertProfile> profile;
    bool degenerate = false;  // all minors vanish (derivation proportional to Euler)

    ProfileVerdict finiteness() const {
        if (degenerate) return ProfileVerdict::PositiveDimensional;
        return profile ? profile->verdict : ProfileVerdict::Inconclusive;
    }
    bool finite() const { return finiteness() == ProfileVerdict::Finite; }
    long length() const;
};

Eigenscheme eigenscheme_of(const Derivation& delta, std::optional<int> t_max = std::nullopt,
                           ElimBackend backend = ElimBackend::FastParallel);

/// det3([(x,y,z) | P | Q]) = c * curve with c != 0; equivalently
/// sum Q_i R_i = c * curve against the minors.
struct ContainmentCertificate {
    Poly curve;
    std::array<Poly, 3> q;
    Scalar c;
};

struct ContainmentResult {
    std::optional<ContainmentCertificate> certificate;
    std::string note;  // on refusal: why membership fails
    bool contains() const { return certificate.has_value(); }
};

/// Does the curve contain the eigenscheme in its degree? Certified both
/// ways: a certificate is re-verified by expansion, a refusal is backed by
/// an exact infeasibility proof of the membership system.
ContainmentResult contains_curve(const Eigenscheme& gamma, const Poly& curve,
                                 ElimBackend backend = ElimBackend::FastParallel);

void verify_containment_certificate(const Eigenscheme& gamma, const ContainmentCertificate& cert);

/// Executable form of the freeness <-> containment equivalence for a single
/// derivation: V(F) is free with exponents (deg delta, d - deg delta - 1)
/// iff F lies in the eigenscheme ideal in degree d. Disagreement between the
/// two independently computed sides throws ConsistencyError.
struct EquivalenceReport {
    int a = 0, b = 0;
    bool free = false;
    bool contains = false;
    std::optional<FreenessCertificate> freeness_certificate;
    std::optional<ContainmentCertificate> containment_certificate;
};
EquivalenceReport freeness_containment_check(const Derivation& delta, const Poly& curve,
                                             ElimBackend backend = ElimBackend::FastParallel);

}  // namespace freecurve

#endif
