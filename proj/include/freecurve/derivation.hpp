#ifndef FREECURVE_DERIVATION_HPP
#define FREECURVE_DERIVATION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "freecurve/gradedlin.hpp"
#include "freecurve/poly.hpp"

namespace freecurve {

/// P1 dx + P2 dy + P3 dz with equal-degree homogeneous coefficients,
/// not all zero.
class Derivation {
  public:
    explicit Derivation(std::array<Poly, 3> coeffs);

    static Derivation euler(const FieldId& f);  // x dx + y dy + z dz

    const std::array<Poly, 3>& coeffs() const { return coeffs_; }
    const FieldId& field() const { return coeffs_[0].field(); }
    int degree() const { return degree_; }

    /// Apply to a polynomial: P1 f_x + P2 f_y + P3 f_z.
    Poly operator()(const Poly& f) const;

    Derivation operator+(const Derivation& o) const;
    Derivation operator*(const Poly& h) const;  // coefficient-wise
    Derivation operator*(const Scalar& c) const;
    bool operator==(const Derivation& o) const { return coeffs_[0] == o.coeffs_[0] && coeffs_[1] == o.coeffs_[1] && coeffs_[2] == o.coeffs_[2]; }

  private:
    std::array<Poly, 3> coeffs_;
    int degree_;
};

/// Exact division test of delta(f) by f: the cofactor K with
/// delta(f) = K f, or nullopt when delta is not tangent to V(f).
std::optional<Poly> tangency(const Derivation& delta, const Poly& f);

/// Euler decomposition delta = delta0 + (K/d) delta_E with delta0(f) = 0.
/// delta0 is nullopt when delta is proportional to the Euler derivation.
struct EulerSplit {
    std::optional<Derivation> der0_part;
    Poly cofactor;
};
EulerSplit euler_split(const Derivation& delta, const Poly& f);

/// Basis of the degree-e piece of Der0(f) = ker(nabla f).
std::vector<Derivation> der0_basis(const Poly& f, int e, ElimBackend backend = ElimBackend::FastParallel);

/// Least e in [0, deg f - 1] with Der0(f)_e nonzero; nullopt when none.
std::optional<int> minimal_relation_degree(const Poly& f, ElimBackend backend = ElimBackend::FastParallel);

/// The scalar c with det3(delta_E, t1, t2) = c f (zero allowed). Verifies
/// tangency and the degree condition deg t1 + deg t2 = deg f - 1.
Scalar saito_scalar(const Poly& f, const Derivation& t1, const Derivation& t2);

struct FreenessCertificate {
    int a = 0, b = 0;  // a <= b, a + b + 1 = deg f
    Derivation theta1, theta2;
    Scalar c;           // det3(delta_E, theta1, theta2) = c f, c != 0
    Poly k1, k2;        // tangency cofactors theta_i(f) = k_i f
};

/// Re-checks every certificate identity by pure expansion, independent of
/// how the certificate was produced. Throws Refusal on any failure.
void verify_freeness_certificate(const Poly& f, const FreenessCertificate& cert);

enum class FreenessStatus { Free, NotFree, Inconclusive };

struct FreenessVerdict {
    FreenessStatus status = FreenessStatus::Inconclusive;
    std::optional<FreenessCertificate> certificate;
    std::string reason;
    std::optional<int> mdr;

    bool free() const { return status == FreenessStatus::Free; }
};

/// Saito-criterion freeness decision. The NotFree branch is backed by
/// bilinearity of (t1,t2) |-> c: vanishing on basis pairs implies vanishing
/// on the spans, which for a free curve would contain its generators.
FreenessVerdict decide_freeness(const Poly& f, ElimBackend backend = ElimBackend::FastParallel);

/// Is f free *with the prescribed exponents*? (A curve can be free with
/// different exponents and still fail this.) Requires a + b + 1 = deg f.
struct ExponentCheck {
    bool free = false;
    std::optional<FreenessCertificate> certificate;
};
ExponentCheck free_with_exponents(const Poly& f, int a, int b, ElimBackend backend = ElimBackend::FastParallel);

struct ReducednessReport {
    bool reduced = false;
    std::string diagnostic;
};

/// Squarefreeness of f, decided geometrically: a transversal line with
/// squarefree restriction certifies reduced; otherwise the singular-locus
/// ideal <f, grad f> must have a finite Hilbert profile.
ReducednessReport is_reduced(const Poly& f);

}  // namespace freecurve

#endif
