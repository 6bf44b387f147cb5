#include "freecurve/derivation.hpp"

#include <omp.h>

#include <random>

#include "freecurve/errors.hpp"
#include "freecurve/univariate.hpp"

namespace freecurve {

Derivation::Derivation(std::array<Poly, 3> coeffs) : coeffs_(std::move(coeffs)) {
    const FieldId& f = coeffs_[0].field();
    int deg = -1;
    for (const Poly& p : coeffs_) {
        if (!(p.field() == f)) throw FieldMismatch("derivation coefficients in different fields");
        if (p.is_zero()) continue;
        int d = p.homogeneous_degree();
        if (deg < 0) deg = d;
        if (deg != d) throw DegreeMismatch("derivation coefficients must share one degree");
    }
    if (deg < 0) throw Refusal("zero derivation");
    degree_ = deg;
}

Derivation Derivation::euler(const FieldId& f) { return Derivation(coordinate_triple(f)); }

Poly Derivation::operator()(const Poly& f) const {
    if (!(f.field() == field())) throw FieldMismatch();
    return coeffs_[0] * f.partial(0) + coeffs_[1] * f.partial(1) + coeffs_[2] * f.partial(2);
}

Derivation Derivation::operator+(const Derivation& o) const {
    return Derivation({coeffs_[0] + o.coeffs_[0], coeffs_[1] + o.coeffs_[1], coeffs_[2] + o.coeffs_[2]});
}

Derivation Derivation::operator*(const Poly& h) const {
    return Derivation({coeffs_[0] * h, coeffs_[1] * h, coeffs_[2] * h});
}

Derivation Derivation::operator*(const Scalar& c) const {
    return Derivation({coeffs_[0] * c, coeffs_[1] * c, coeffs_[2] * c});
}

std::optional<Poly> tangency(const Derivation& delta, const Poly& f) {
    if (f.is_zero()) throw Refusal("tangency against the zero polynomial");
    f.homogeneous_degree();
    Poly img = delta(f);
    if (img.is_zero()) return Poly::zero(f.field());
    return img.divide_exact(f);
}

EulerSplit euler_split(const Derivation& delta, const Poly& f) {
    int d = f.homogeneous_degree();
    if (d < 1) throw Refusal("euler_split requires a nonconstant polynomial");
    if (f.field().kind == FieldKind::Fp && static_cast<std::uint64_t>(d) % f.field().p == 0)
        throw CharacteristicDividesDegree("cannot divide by deg(f) in characteristic p");
    auto k = tangency(delta, f);
    if (!k) throw NotTangent("euler_split requires a tangent derivation");
    Scalar dinv = Scalar::of_int(f.field(), d).inverse();
    Derivation euler = Derivation::euler(f.field());
    std::array<Poly, 3> adj;
    for (int i = 0; i < 3; ++i) adj[i] = delta.coeffs()[i] - (*k * dinv) * euler.coeffs()[i];
    EulerSplit out{std::nullopt, *k};
    if (adj[0].is_zero() && adj[1].is_zero() && adj[2].is_zero()) return out;
    Derivation d0(std::move(adj));
    if (!d0(f).is_zero()) throw ConsistencyError("euler split residual is not in Der0");
    out.der0_part = std::move(d0);
    return out;
}

std::vector<Derivation> der0_basis(const Poly& f, int e, ElimBackend backend) {
    auto grad = f.gradient();
    std::vector<Poly> maps(grad.begin(), grad.end());
    std::vector<Derivation> out;
    for (auto& tup : graded_kernel(maps, e, backend)) {
        out.emplace_back(std::array<Poly, 3>{std::move(tup[0]), std::move(tup[1]), std::move(tup[2])});
    }
    return out;
}

std::optional<int> minimal_relation_degree(const Poly& f, ElimBackend backend) {
    int d = f.homogeneous_degree();
    for (int e = 0; e <= d - 1; ++e) {
        if (!der0_basis(f, e, backend).empty()) return e;
    }
    return std::nullopt;
}

namespace {

// det3 of (delta_E, t1, t2) as columns; the caller interprets it.
Poly saito_determinant(const Poly& f, const Derivation& t1, const Derivation& t2) {
    PolyMatrix m = PolyMatrix::from_columns(
        {coordinate_triple(f.field()), t1.coeffs(), t2.coeffs()});
    return det3(m);
}

Scalar saito_scalar_unchecked(const Poly& f, const Derivation& t1, const Derivation& t2) {
    Poly det = saito_determinant(f, t1, t2);
    if (det.is_zero()) return Scalar::zero(f.field());
    auto q = det.divide_exact(f);
    if (!q || !q->is_constant())
        throw ConsistencyError("Saito determinant of tangent derivations is not a multiple of f");
    return q->leading_term().c;
}

}  // namespace

Scalar saito_scalar(const Poly& f, const Derivation& t1, const Derivation& t2) {
    int d = f.homogeneous_degree();
    if (t1.degree() + t2.degree() != d - 1)
        throw DegreeMismatch("derivation degrees must sum to deg(f) - 1");
    if (!tangency(t1, f) || !tangency(t2, f)) throw TangencyViolated("derivation is not tangent to the curve");
    return saito_scalar_unchecked(f, t1, t2);
}

void verify_freeness_certificate(const Poly& f, const FreenessCertificate& cert) {
    int d = f.homogeneous_degree();
    if (cert.a + cert.b + 1 != d) throw Refusal("certificate exponents do not sum to deg(f) - 1");
    if (cert.c.is_zero()) throw Refusal("certificate scalar c must be nonzero");
    if (cert.theta1.degree() != cert.a || cert.theta2.degree() != cert.b)
        throw Refusal("certificate derivation degrees disagree with the exponents");
    if (!(cert.theta1(f) == cert.k1 * f)) throw Refusal("tangency identity for theta1 fails");
    if (!(cert.theta2(f) == cert.k2 * f)) throw Refusal("tangency identity for theta2 fails");
    Poly det = saito_determinant(f, cert.theta1, cert.theta2);
    if (!(det == f * cert.c)) throw Refusal("Saito determinant identity fails");
}

ExponentCheck free_with_exponents(const Poly& f, int a, int b, ElimBackend backend) {
    int d = f.homogeneous_degree();
    if (a < 0 || b < 0 || a + b + 1 != d) throw DegreeMismatch("exponents must be nonnegative and sum to deg(f) - 1");
    std::vector<Derivation> basis_a = der0_basis(f, a, backend);
    if (basis_a.empty()) return {};
    std::vector<Derivation> basis_b = a == b ? basis_a : der0_basis(f, b, backend);
    if (basis_b.empty()) return {};

    // The pairing is bilinear, so scanning basis pairs decides the spans.
    // Pairs are evaluated in lexicographic blocks; the first nonzero pair
    // wins regardless of thread count.
    const std::size_t total = basis_a.size() * basis_b.size();
    const std::size_t block = std::max<std::size_t>(1, 2 * static_cast<std::size_t>(omp_get_max_threads()));
    for (std::size_t lo = 0; lo < total; lo += block) {
        const std::size_t hi = std::min(total, lo + block);
        std::vector<Scalar> dets(hi - lo, Scalar::zero(f.field()));
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t k = lo; k < hi; ++k) {
            const Derivation& t1 = basis_a[k / basis_b.size()];
            const Derivation& t2 = basis_b[k % basis_b.size()];
            dets[k - lo] = saito_scalar_unchecked(f, t1, t2);
        }
        for (std::size_t k = lo; k < hi; ++k) {
            if (dets[k - lo].is_zero()) continue;
            const Derivation& t1 = basis_a[k / basis_b.size()];
            const Derivation& t2 = basis_b[k % basis_b.size()];
            FreenessCertificate cert{std::min(a, b),
                                     std::max(a, b),
                                     a <= b ? t1 : t2,
                                     a <= b ? t2 : t1,
                                     a <= b ? dets[k - lo] : -dets[k - lo],
                                     Poly::zero(f.field()),
                                     Poly::zero(f.field())};
            verify_freeness_certificate(f, cert);
            return ExponentCheck{true, std::move(cert)};
        }
    }
    return {};
}

FreenessVerdict decide_freeness(const Poly& f, ElimBackend backend) {
    int d = f.homogeneous_degree();
    if (d < 1) throw Refusal("freeness is defined for nonconstant curves");
    if (f.field().kind == FieldKind::Fp && f.field().p <= static_cast<std::uint64_t>(d))
        throw FieldUnsupported("GF(p) runs require p > deg(f)");
    ReducednessReport red = is_reduced(f);
    if (!red.reduced) throw NotReduced("input curve is not reduced: " + red.diagnostic);

    FreenessVerdict verdict;
    auto a_opt = minimal_relation_degree(f, backend);
    verdict.mdr = a_opt;
    if (!a_opt) {
        verdict.status = FreenessStatus::NotFree;
        verdict.reason = "no tangent derivation of degree below deg(f)";
        return verdict;
    }
    int a = *a_opt;
    if (2 * a > d - 1) {
        verdict.status = FreenessStatus::NotFree;
        verdict.reason = "minimal relation degree " + std::to_string(a) +
                         " exceeds (deg(f)-1)/2; exponents must sum to deg(f)-1";
        return verdict;
    }
    int b = d - 1 - a;
    ExponentCheck check = free_with_exponents(f, a, b, backend);
    if (check.free) {
        verdict.status = FreenessStatus::Free;
        verdict.certificate = std::move(check.certificate);
        return verdict;
    }
    verdict.status = FreenessStatus::NotFree;
    verdict.reason = "Saito pairing identically zero on Der0_" + std::to_string(a) + " x Der0_" + std::to_string(b);
    return verdict;
}

ReducednessReport is_reduced(const Poly& f) {
    if (f.is_zero()) throw Refusal("reducedness of the zero polynomial is undefined");
    int d = f.homogeneous_degree();
    if (d < 1) throw Refusal("reducedness is about curves; got a constant");
    const FieldId field = f.field();
    if (field.kind == FieldKind::Fp && field.p <= static_cast<std::uint64_t>(d))
        throw FieldUnsupported("squarefreeness test requires characteristic > deg(f)");

    // A line transversal to the curve with squarefree restriction certifies
    // squarefreeness: a repeated factor of f restricts to a repeated factor
    // on every line.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    auto rand_scalar = [&]() { return Scalar::of_int(field, static_cast<long>(rng() % 13) - 6); };
    for (int tries = 0; tries < 12; ++tries) {
        std::array<Scalar, 3> p{rand_scalar(), rand_scalar(), rand_scalar()};
        std::array<Scalar, 3> q{rand_scalar(), rand_scalar(), rand_scalar()};
        if (f.evaluate(p).is_zero()) continue;  // keep the full degree on the line
        UPoly restr = restrict_to_line(f, p, q);
        if (restr.degree() != d) continue;
        UPoly der = restr.derivative();
        if (der.is_zero()) continue;
        if (gcd(restr, der).degree() == 0)
            return {true, "squarefree restriction on a transversal line"};
    }
    // All sampled lines met repeated roots: decide via the singular locus.
    GradedIdeal jac(field, {f, f.partial(0), f.partial(1), f.partial(2)});
    HilbertProfile prof = hilbert_profile(jac);
    switch (prof.verdict) {
        case ProfileVerdict::Finite:
            return {true, "singular locus is a finite scheme (length " + std::to_string(prof.length()) + ")"};
        case ProfileVerdict::PositiveDimensional:
            return {false, "singular locus is positive-dimensional"};
        case ProfileVerdict::Inconclusive: break;
    }
    throw InconclusiveProfile("singular-locus profile did not stabilize within the bound");
}

}  // namespace freecurve
