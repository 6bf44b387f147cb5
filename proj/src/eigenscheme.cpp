#include "freecurve/eigenscheme.hpp"

#include "freecurve/errors.hpp"

namespace freecurve {

long Eigenscheme::length() const {
    if (!finite() || !profile) throw EigenschemeNotFinite("eigenscheme is not a finite scheme");
    return profile->length();
}

Eigenscheme eigenscheme_of(const Derivation& delta, std::optional<int> t_max, ElimBackend backend) {
    const FieldId field = delta.field();
    PolyMatrix m = PolyMatrix::from_columns({coordinate_triple(field), delta.coeffs()});
    std::array<Poly, 3> minors = minors2x2(m);
    std::vector<Poly> gens;
    for (const Poly& r : minors)
        if (!r.is_zero()) gens.push_back(r);
    Eigenscheme out{delta, minors, GradedIdeal(field, {}), std::nullopt, gens.empty()};
    if (out.degenerate) return out;
    out.ideal = GradedIdeal(field, gens);
    out.profile = hilbert_profile(out.ideal, t_max, backend);
    return out;
}

void verify_containment_certificate(const Eigenscheme& gamma, const ContainmentCertificate& cert) {
    if (cert.c.is_zero()) throw Refusal("containment certificate scalar must be nonzero");
    Poly acc = Poly::zero(cert.curve.field());
    for (int i = 0; i < 3; ++i) acc = acc + cert.q[i] * gamma.minors[i];
    if (!(acc == cert.curve * cert.c))
        throw Refusal("containment certificate fails the determinant identity");
}

ContainmentResult contains_curve(const Eigenscheme& gamma, const Poly& curve, ElimBackend backend) {
    if (!gamma.finite()) throw EigenschemeNotFinite("containment test requires a finite eigenscheme");
    int n = gamma.source.degree();
    int deg = curve.homogeneous_degree();
    if (deg < n + 1)
        throw DegreeTooSmall("curve degree must be at least deg(derivation) + 1 = " + std::to_string(n + 1));

    auto cert_q = membership_certificate(curve, gamma.ideal, backend);
    if (!cert_q) {
        return ContainmentResult{std::nullopt,
                                 "membership system certified infeasible in degree " + std::to_string(deg)};
    }
    // Map certificate coefficients back to the three minors (zero minors
    // receive the zero coefficient).
    std::array<Poly, 3> q = {Poly::zero(curve.field()), Poly::zero(curve.field()), Poly::zero(curve.field())};
    std::size_t k = 0;
    for (int i = 0; i < 3; ++i) {
        if (gamma.minors[i].is_zero()) continue;
        q[i] = (*cert_q)[k++];
    }
    ContainmentCertificate cert{curve, std::move(q), Scalar::one(curve.field())};
    verify_containment_certificate(gamma, cert);
    return ContainmentResult{std::move(cert), ""};
}

EquivalenceReport freeness_containment_check(const Derivation& delta, const Poly& curve, ElimBackend backend) {
    auto k = tangency(delta, curve);
    if (!k) throw TangencyViolated("the derivation is not tangent to the curve");
    int d = curve.homogeneous_degree();
    int a = delta.degree();
    if (d < a + 1) throw DegreeTooSmall("curve degree must exceed the derivation degree");
    ReducednessReport red = is_reduced(curve);
    if (!red.reduced) throw NotReduced(red.diagnostic);
    Eigenscheme gamma = eigenscheme_of(delta, std::nullopt, backend);
    if (!gamma.finite())
        throw EigenschemeNotFinite("equivalence check requires a finite eigenscheme (irreducibility proxy)");

    EquivalenceReport rep;
    rep.a = a;
    rep.b = d - a - 1;
    ExponentCheck side_a = free_with_exponents(curve, rep.a, rep.b, backend);
    ContainmentResult side_b = contains_curve(gamma, curve, backend);
    rep.free = side_a.free;
    rep.contains = side_b.contains();
    rep.freeness_certificate = std::move(side_a.certificate);
    rep.containment_certificate = std::move(side_b.certificate);
    if (rep.free != rep.contains)
        throw ConsistencyError("freeness and eigenscheme containment disagree: exponents (" +
                               std::to_string(rep.a) + "," + std::to_string(rep.b) + ")");
    return rep;
}

}  // namespace freecurve
